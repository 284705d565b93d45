#pragma once

#include "argcsr/argcsr.hpp"
#include "argcsr/ellpack.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace argcsr {

using StoredMatrix =
    std::variant<CsrMatrix, EllpackMatrix, SlicedEllpackMatrix, ArgCsrMatrix>;

/// Reads a Matrix Market coordinate file: real/integer/pattern fields,
/// general/symmetric/skew-symmetric symmetry. Pattern entries get value 1.0,
/// symmetric variants are expanded (off-diagonal mirror, negated for
/// skew-symmetric), indexes converted to 0-based, duplicates summed.
/// Throws ParseError (malformed), BoundsError (index out of declared size),
/// UnsupportedError (array format, complex field, hermitian symmetry).
CsrMatrix read_matrix_market(std::istream& in);
CsrMatrix read_matrix_market_file(const std::string& path);

/// Writes coordinate/real/general, 1-based, full double round-trip precision.
void write_matrix_market(std::ostream& out, const CsrMatrix& A);
void write_matrix_market_file(const std::string& path, const CsrMatrix& A);

/// Binary container: 8-byte magic, u32 version, u8 format tag, then
/// little-endian u64 scalars and u64-length-prefixed arrays (f64 values
/// bit-preserved, i32 columns). Round-trips every field including sentinel
/// positions.
void write_binary(std::ostream& out, const CsrMatrix& A);
void write_binary(std::ostream& out, const EllpackMatrix& M);
void write_binary(std::ostream& out, const SlicedEllpackMatrix& M);
void write_binary(std::ostream& out, const ArgCsrMatrix& M);

/// Throws FormatError on magic/version/tag mismatch, ParseError on truncation.
StoredMatrix read_binary(std::istream& in);
StoredMatrix read_binary_file(const std::string& path);
void write_binary_file(const std::string& path, const StoredMatrix& M);

} // namespace argcsr
