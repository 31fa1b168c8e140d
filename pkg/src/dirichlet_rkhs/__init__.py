"""Modified Bergman-, Bargmann- and Hardy-Dirichlet spaces: norms, reproducing
kernels, Segal-Bargmann transforms and a verification harness."""
from .errors import ConvergenceError, DirichletError, DomainError, IndexRangeError, ParityError, QuadratureError
from .kernels import bargmann_kernel, bergman_kernel, hardy_kernel, kernel, kernel_series
from .measures import DiskMeasureParams, FockMeasureParams, QuadratureRule
from .spaces import (
    BargmannDirichletParams,
    BergmanDirichletParams,
    HardyDirichletParams,
    LaurentSeries,
    dirichlet_inner_product,
    dirichlet_norm,
)
from .specfun import HypergeomSpec, pfq, pfq_eval, pochhammer
from .transforms import SubspaceVector, TransformSpec, apply_transform_coeff
from .verify import SuiteConfig, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BargmannDirichletParams",
    "BergmanDirichletParams",
    "ConvergenceError",
    "DirichletError",
    "DiskMeasureParams",
    "DomainError",
    "FockMeasureParams",
    "HardyDirichletParams",
    "HypergeomSpec",
    "IndexRangeError",
    "LaurentSeries",
    "ParityError",
    "QuadratureError",
    "QuadratureRule",
    "SubspaceVector",
    "SuiteConfig",
    "TransformSpec",
    "VerificationReport",
    "apply_transform_coeff",
    "bargmann_kernel",
    "bergman_kernel",
    "dirichlet_inner_product",
    "dirichlet_norm",
    "hardy_kernel",
    "kernel",
    "kernel_series",
    "pfq",
    "pfq_eval",
    "pochhammer",
    "run_suite",
]
