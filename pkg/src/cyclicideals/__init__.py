"""Exact combinatorics of ideals in path algebras of admissibly oriented cyclic quivers."""
from .enumeration import (CountReport, catalan, count_constant_signature, count_indecomposable, count_nilpotent,
                          count_nilpotent_indecomposable, enumerate_ideals)
from .errors import CyclicIdealError
from .ideal import (Ideal, IdealGraph, IdealType, classify_type, close_generators, decompose, graph_of,
                    is_indecomposable, width)
from .kernels import BACKEND
from .product import (StarTable, build_star_table, is_semigroup, multiply, reduce_right_factor, split_criterion,
                      star)
from .quiver import Path, Quiver, build_from_word, from_signature
from .stair import (CylDyckPath, DyckComponent, MatrixUnit, StairRealization, avoids_diagonal, from_dyck,
                    is_connected, parse_ascii, realize, render_ascii, slopes, to_dyck)

__version__ = "0.1.0"
