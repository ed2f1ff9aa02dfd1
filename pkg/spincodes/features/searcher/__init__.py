"""Numerical search for covariant codes over the reduced KL quadratic system."""
from .system import QuadraticSystem, build_system, definite_forms
from .solver import Solution, canonicalize, local_solve, solve
from .search_service import SearchResult, CodeSearchService, code_search_service, search_code, not_found_report

__all__ = [
    "QuadraticSystem",
    "build_system",
    "definite_forms",
    "Solution",
    "canonicalize",
    "local_solve",
    "solve",
    "SearchResult",
    "CodeSearchService",
    "code_search_service",
    "search_code",
    "not_found_report",
]
