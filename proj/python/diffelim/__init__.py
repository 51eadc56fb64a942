from ._diffelim import (
    ConfigurationError,
    ConsistencyError,
    DegenerateConfiguration,
    NotSuperEssential,
    ParseError,
    Pipeline,
    Poly,
    System,
    TightnessRetryExceeded,
    ValidationError,
    VanishedError,
    divide_polynomial,
    exact_divide,
)

__all__ = [
    "ConfigurationError",
    "ConsistencyError",
    "DegenerateConfiguration",
    "NotSuperEssential",
    "ParseError",
    "Pipeline",
    "Poly",
    "System",
    "TightnessRetryExceeded",
    "ValidationError",
    "VanishedError",
    "divide_polynomial",
    "exact_divide",
]
