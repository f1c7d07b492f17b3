"""
Polynomial matrices, random distributions and the matrix text format.

Public API:
  - SymMatrix / submatrix / transpose / permute_rows
  - gen_one_homogeneous / gen_sparse_linear
  - read_matrix / format_matrix / load_matrix / dump_matrix
"""

from symdet.matrix.fileformat import dump_matrix, format_matrix, load_matrix, read_matrix
from symdet.matrix.generators import gen_one_homogeneous, gen_sparse_linear
from symdet.matrix.sym_matrix import SymMatrix, permute_rows, submatrix, transpose

__all__ = [
    "SymMatrix",
    "dump_matrix",
    "format_matrix",
    "gen_one_homogeneous",
    "gen_sparse_linear",
    "load_matrix",
    "permute_rows",
    "read_matrix",
    "submatrix",
    "transpose",
]
