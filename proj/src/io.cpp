#include "argcsr/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace argcsr {

namespace {

constexpr char kMagic[8] = {'S', 'P', 'F', 'M', 'T', 'B', 'I', 'N'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint8_t kTagCsr = 0;
constexpr std::uint8_t kTagEllpack = 1;
constexpr std::uint8_t kTagSliced = 2;
constexpr std::uint8_t kTagArgCsr = 3;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size()) continue;
        if (line[i] == '%') continue;
        return true;
    }
    return false;
}

} // namespace

CsrMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner)) {
        throw ParseError("matrix market: empty stream");
    }
    std::istringstream hs(banner);
    std::string tag, object, format, field, symmetry;
    hs >> tag >> object >> format >> field >> symmetry;
    if (lower(tag) != "%%matrixmarket" || !hs) {
        throw ParseError("matrix market: malformed header line");
    }
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);

    if (object != "matrix") {
        throw UnsupportedError("matrix market: object '" + object + "' not supported");
    }
    if (format != "coordinate") {
        if (format == "array") {
            throw UnsupportedError("matrix market: array format not supported");
        }
        throw ParseError("matrix market: unknown format '" + format + "'");
    }
    const bool pattern = field == "pattern";
    if (!pattern && field != "real" && field != "integer") {
        if (field == "complex") {
            throw UnsupportedError("matrix market: complex field not supported");
        }
        throw ParseError("matrix market: unknown field '" + field + "'");
    }
    const bool symmetric = symmetry == "symmetric";
    const bool skew = symmetry == "skew-symmetric";
    if (!symmetric && !skew && symmetry != "general") {
        if (symmetry == "hermitian") {
            throw UnsupportedError("matrix market: hermitian symmetry not supported");
        }
        throw ParseError("matrix market: unknown symmetry '" + symmetry + "'");
    }

    std::string line;
    if (!next_data_line(in, line)) {
        throw ParseError("matrix market: missing size line");
    }
    std::istringstream ss(line);
    long long rows = 0, cols = 0, entries = 0;
    if (!(ss >> rows >> cols >> entries) || rows < 0 || cols < 0 || entries < 0) {
        throw ParseError("matrix market: malformed size line '" + line + "'");
    }
    if (rows == 0 || cols == 0) {
        throw ParseError("matrix market: matrix dimensions must be positive");
    }

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(entries) * (symmetric || skew ? 2 : 1));
    for (long long k = 0; k < entries; ++k) {
        if (!next_data_line(in, line)) {
            throw ParseError("matrix market: expected " + std::to_string(entries) +
                             " entries, got " + std::to_string(k));
        }
        std::istringstream es(line);
        long long i = 0, j = 0;
        double v = 1.0;
        if (!(es >> i >> j)) {
            throw ParseError("matrix market: malformed entry '" + line + "'");
        }
        if (!pattern && !(es >> v)) {
            throw ParseError("matrix market: entry missing value '" + line + "'");
        }
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw BoundsError("matrix market: entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") outside " + std::to_string(rows) +
                              "x" + std::to_string(cols));
        }
        const std::size_t r = static_cast<std::size_t>(i - 1);
        const std::size_t c = static_cast<std::size_t>(j - 1);
        triplets.push_back({r, c, v});
        if ((symmetric || skew) && r != c) {
            triplets.push_back({c, r, skew ? -v : v});
        }
    }
    return csr_from_triplets(static_cast<std::size_t>(rows),
                             static_cast<std::size_t>(cols), std::move(triplets));
}

CsrMatrix read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const CsrMatrix& A) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.num_rows << ' ' << A.num_cols << ' ' << A.nnz() << '\n';
    out << std::setprecision(17);
    for (std::size_t r = 0; r < A.num_rows; ++r) {
        for (std::size_t k = A.row_pointers[r]; k < A.row_pointers[r + 1]; ++k) {
            out << (r + 1) << ' ' << (A.columns[k] + 1) << ' ' << A.values[k] << '\n';
        }
    }
    if (!out) {
        throw IoError("matrix market: write failure");
    }
}

void write_matrix_market_file(const std::string& path, const CsrMatrix& A) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write_matrix_market(out, A);
}

namespace {

void put_bytes(std::ostream& out, const char* p, std::size_t n) { out.write(p, n); }

void put_u8(std::ostream& out, std::uint8_t v) {
    const char c = static_cast<char>(v);
    out.write(&c, 1);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

void put_i32(std::ostream& out, index_t v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }

void get_bytes(std::istream& in, char* p, std::size_t n) {
    if (!in.read(p, static_cast<std::streamsize>(n))) {
        throw ParseError("binary stream truncated");
    }
}

std::uint8_t get_u8(std::istream& in) {
    char c;
    get_bytes(in, &c, 1);
    return static_cast<std::uint8_t>(c);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    get_bytes(in, reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    get_bytes(in, reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

index_t get_i32(std::istream& in) { return std::bit_cast<index_t>(get_u32(in)); }

void put_array(std::ostream& out, const std::vector<double>& a) {
    put_u64(out, a.size());
    for (double v : a) put_f64(out, v);
}

void put_array(std::ostream& out, const std::vector<index_t>& a) {
    put_u64(out, a.size());
    for (index_t v : a) put_i32(out, v);
}

void put_array(std::ostream& out, const std::vector<std::size_t>& a) {
    put_u64(out, a.size());
    for (std::size_t v : a) put_u64(out, v);
}

// Element-at-a-time reads so a corrupt length prefix fails with ParseError
// at end of stream instead of one huge allocation.
template <typename T, typename Get>
std::vector<T> get_array(std::istream& in, Get get) {
    const std::uint64_t n = get_u64(in);
    std::vector<T> a;
    a.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, 1u << 20)));
    for (std::uint64_t i = 0; i < n; ++i) a.push_back(get(in));
    return a;
}

void put_header(std::ostream& out, std::uint8_t tag) {
    put_bytes(out, kMagic, sizeof(kMagic));
    put_u32(out, kVersion);
    put_u8(out, tag);
}

} // namespace

void write_binary(std::ostream& out, const CsrMatrix& A) {
    put_header(out, kTagCsr);
    put_u64(out, A.num_rows);
    put_u64(out, A.num_cols);
    put_array(out, A.values);
    put_array(out, A.columns);
    put_array(out, A.row_pointers);
    if (!out) throw IoError("binary write failure");
}

void write_binary(std::ostream& out, const EllpackMatrix& M) {
    put_header(out, kTagEllpack);
    put_u64(out, M.num_rows);
    put_u64(out, M.num_cols);
    put_u64(out, M.width);
    put_array(out, M.values);
    put_array(out, M.columns);
    if (!out) throw IoError("binary write failure");
}

void write_binary(std::ostream& out, const SlicedEllpackMatrix& M) {
    put_header(out, kTagSliced);
    put_u64(out, M.num_rows);
    put_u64(out, M.num_cols);
    put_u64(out, M.slice_size);
    put_array(out, M.slice_widths);
    put_array(out, M.slice_offsets);
    put_array(out, M.values);
    put_array(out, M.columns);
    if (!out) throw IoError("binary write failure");
}

void write_binary(std::ostream& out, const ArgCsrMatrix& M) {
    put_header(out, kTagArgCsr);
    put_u64(out, M.num_rows);
    put_u64(out, M.num_cols);
    put_u64(out, M.threads_per_group);
    put_u64(out, M.groups.size());
    for (const GroupInfo& g : M.groups) {
        put_u64(out, g.first_row);
        put_u64(out, g.size);
        put_u64(out, g.offset);
        put_u64(out, g.chunk_size);
    }
    put_array(out, M.threads_mapping);
    put_array(out, M.values);
    put_array(out, M.columns);
    if (!out) throw IoError("binary write failure");
}

StoredMatrix read_binary(std::istream& in) {
    char magic[8];
    get_bytes(in, magic, sizeof(magic));
    if (!std::equal(magic, magic + sizeof(magic), kMagic)) {
        throw FormatError("binary: bad magic");
    }
    const std::uint32_t version = get_u32(in);
    if (version != kVersion) {
        throw FormatError("binary: unsupported version " + std::to_string(version));
    }
    const std::uint8_t tag = get_u8(in);
    switch (tag) {
    case kTagCsr: {
        CsrMatrix A;
        A.num_rows = get_u64(in);
        A.num_cols = get_u64(in);
        A.values = get_array<double>(in, get_f64);
        A.columns = get_array<index_t>(in, get_i32);
        A.row_pointers = get_array<std::size_t>(
            in, [](std::istream& s) { return static_cast<std::size_t>(get_u64(s)); });
        return A;
    }
    case kTagEllpack: {
        EllpackMatrix M;
        M.num_rows = get_u64(in);
        M.num_cols = get_u64(in);
        M.width = get_u64(in);
        M.values = get_array<double>(in, get_f64);
        M.columns = get_array<index_t>(in, get_i32);
        return M;
    }
    case kTagSliced: {
        SlicedEllpackMatrix M;
        M.num_rows = get_u64(in);
        M.num_cols = get_u64(in);
        M.slice_size = get_u64(in);
        auto u64s = [](std::istream& s) { return static_cast<std::size_t>(get_u64(s)); };
        M.slice_widths = get_array<std::size_t>(in, u64s);
        M.slice_offsets = get_array<std::size_t>(in, u64s);
        M.values = get_array<double>(in, get_f64);
        M.columns = get_array<index_t>(in, get_i32);
        return M;
    }
    case kTagArgCsr: {
        ArgCsrMatrix M;
        M.num_rows = get_u64(in);
        M.num_cols = get_u64(in);
        M.threads_per_group = get_u64(in);
        const std::uint64_t groups = get_u64(in);
        M.groups.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(groups, 1u << 20)));
        for (std::uint64_t g = 0; g < groups; ++g) {
            GroupInfo info;
            info.first_row = get_u64(in);
            info.size = get_u64(in);
            info.offset = get_u64(in);
            info.chunk_size = get_u64(in);
            M.groups.push_back(info);
        }
        M.threads_mapping = get_array<std::size_t>(
            in, [](std::istream& s) { return static_cast<std::size_t>(get_u64(s)); });
        M.values = get_array<double>(in, get_f64);
        M.columns = get_array<index_t>(in, get_i32);
        return M;
    }
    default:
        throw FormatError("binary: unknown format tag " + std::to_string(tag));
    }
}

StoredMatrix read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return read_binary(in);
}

void write_binary_file(const std::string& path, const StoredMatrix& M) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    std::visit([&out](const auto& m) { write_binary(out, m); }, M);
}

} // namespace argcsr
