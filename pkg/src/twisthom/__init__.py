"""Rational (twisted) cohomology of configuration spaces and of spaces of sphere maps."""

from .confighom import CoeffSystem, ConfigSpaceSpec, Space, UncoveredCase, Variant, config_homology
from .exactlinalg import ChainComplex, ChainComplexError, GradedDims, SparseMatrix, homology_dims, rank
from .mapspaces import Family, MapSpaceSpec
from .partitions import SetPartition, enumerate_partitions, order_complex_pair, relative_partition_homology
from .series import LaurentPolynomial, PoincareSeries, RationalExpr, expand, table_closed_form
from .specseq import E1Page, build_e1, degeneration_status, total_poincare, wedge_support_check

__version__ = "0.1.0"
