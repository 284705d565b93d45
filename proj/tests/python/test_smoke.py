import math

import pytest

import argcsr


def fixture_matrix():
    # 8x8: unit diagonal on rows 0..6, row 7 entirely ones.
    entries = [(r, r, 1.0) for r in range(7)]
    entries += [(7, c, 1.0) for c in range(8)]
    return argcsr.csr_from_triplets(8, 8, entries)


def test_triplets_round_trip():
    a = argcsr.csr_from_triplets(3, 3, [(2, 0, -1.0), (0, 1, 2.0), (0, 1, 3.0)])
    assert a.nnz == 2
    assert argcsr.triplets_from_csr(a) == [(0, 1, 5.0), (2, 0, -1.0)]


def test_spmv_agrees_across_formats():
    a = fixture_matrix()
    x = [1.0 + 0.25 * j for j in range(8)]
    y = argcsr.spmv(a, x)
    assert y == argcsr.spmv(argcsr.ellpack_from_csr(a), x)
    assert y == argcsr.spmv(argcsr.sliced_from_csr(a, slice_size=4), x)
    assert y == argcsr.spmv(
        argcsr.argcsr_from_csr(a, threads_per_group=12, desired_chunk_size=2), x
    )
    assert y[7] == pytest.approx(sum(x))


def test_grouped_format_round_trip():
    a = fixture_matrix()
    m = argcsr.argcsr_from_csr(a, threads_per_group=12, desired_chunk_size=2)
    assert argcsr.csr_from_argcsr(m) == a


def test_fixture_padding():
    a = fixture_matrix()
    ell = argcsr.padding_stats(argcsr.ellpack_from_csr(a))
    assert (ell.assigned_padded_slots, ell.total_allocated_slots) == (49, 64)
    arg = argcsr.padding_stats(
        argcsr.argcsr_from_csr(a, threads_per_group=12, desired_chunk_size=2)
    )
    assert (arg.assigned_padded_slots, arg.total_allocated_slots) == (7, 24)
    assert arg.explicit_nnz == 15
    assert math.isfinite(arg.padding_ratio)


def test_file_io_round_trip(tmp_path):
    a = fixture_matrix()
    text = tmp_path / "m.mtx"
    argcsr.write_matrix_market(str(text), a)
    assert argcsr.read_matrix_market(str(text)) == a

    binary = tmp_path / "m.bin"
    argcsr.write_binary(str(binary), argcsr.argcsr_from_csr(a))
    back = argcsr.read_binary(str(binary))
    assert isinstance(back, argcsr.ArgCsrMatrix)
    assert argcsr.csr_from_argcsr(back) == a


def test_errors_surface_as_exceptions():
    with pytest.raises(argcsr.Error):
        argcsr.csr_from_triplets(2, 2, [(5, 0, 1.0)])
    with pytest.raises(argcsr.Error):
        argcsr.argcsr_from_csr(fixture_matrix(), threads_per_group=0)
    with pytest.raises(argcsr.Error):
        argcsr.spmv(fixture_matrix(), [1.0, 2.0])
