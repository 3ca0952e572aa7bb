from __future__ import annotations


class QCKError(Exception):
    """Base class for toolkit errors."""


class ValidationError(QCKError, ValueError):
    """An input violates a mathematical precondition."""


class NoUnitError(QCKError):
    """The backend algebra has no global unit."""


class BackendMismatchError(QCKError, TypeError):
    """Elements from different algebras were combined."""


class NotVerifiableError(QCKError):
    """The input lies outside what can be checked with concrete finite models."""
