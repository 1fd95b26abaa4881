# -*- coding: utf-8 -*-
"""
Exception hierarchy of embed3.

All errors carry a short ``title`` and a more verbose ``message`` so that the CLI can
print a useful summary instead of a traceback. Errors which refer to a specific
simplex of a complex also record it.

"""
import errno

from embed3.constants import ExitCode


class Embed3Error(Exception):
    """
    Base class for all errors raised by embed3.

    :ivar str title: A short description of the error type. This can be used in a CLI
        to give a short error summary.
    :ivar str message: A more verbose description which can include instructions on how
        to proceed to fix the error.
    :ivar vertex: Vertex of the complex (or graph) that caused the error.
    :ivar edge: Edge of the complex that caused the error.
    :ivar face: Face of the complex that caused the error.
    """

    exit_code = ExitCode.InternalError

    def __init__(self, title, message, vertex=None, edge=None, face=None):
        super().__init__(title, message)
        self.title = title
        self.message = message
        self.vertex = vertex
        self.edge = edge
        self.face = face

    def __str__(self):
        return '. '.join([self.title, self.message])


# ==== input errors ======================================================================

class InputError(Embed3Error):
    """Base class for malformed or inconsistent input."""
    exit_code = ExitCode.InputError


class ComplexError(InputError):
    """Raised when a complex description violates the data model."""
    pass


class MissingFaceError(ComplexError):
    """Raised when an edge is not incident with any face."""
    pass


class DegenerateFaceError(ComplexError):
    """Raised when a face repeats a vertex."""
    pass


class DegenerateEdgeError(ComplexError):
    """Raised when both endpoints of an edge coincide or an edge is repeated."""
    pass


class DanglingReferenceError(ComplexError):
    """Raised when an edge or face refers to a vertex or edge that does not exist."""
    pass


class DuplicateIdError(ComplexError):
    """Raised when two vertices, edges or faces share an id."""
    pass


class UnknownCorpusNameError(InputError):
    """Raised when a corpus name cannot be parsed."""
    pass


class CertificateError(InputError):
    """Raised when a certificate document cannot be read or does not verify."""
    pass


# ==== lookup errors =====================================================================

class LookupFailedError(Embed3Error):
    """Base class for queries about objects that are not present."""
    exit_code = ExitCode.InputError


class UnknownVertexError(LookupFailedError):
    pass


class UnknownEdgeError(LookupFailedError):
    pass


class UnknownElementError(LookupFailedError):
    """Raised when a subset is not contained in the ground set of a matroid."""
    pass


class GroundMismatchError(LookupFailedError):
    """Raised when two matroids are compared on different ground sets."""
    pass


class DisconnectedError(LookupFailedError):
    """Raised when an operation requires a connected 1-skeleton."""
    pass


class ScaleExceededError(Embed3Error):
    """Raised when a combinatorial search would exceed the configured limits."""
    exit_code = ExitCode.ScaleExceeded


class FileError(Embed3Error):
    """Raised when reading or writing a file fails."""
    exit_code = ExitCode.IOError


# ==== embedding errors ==================================================================

class PlanarError(Embed3Error):
    """Base class for failures to build or read a plane embedding."""
    pass


class NotTwoConnectedError(PlanarError):
    pass


class FaceSetNotCycleError(PlanarError):
    """Raised when the edges at a prescribed dual vertex do not form a cycle."""
    pass


class NotPlanarAssemblyError(PlanarError):
    """Raised when prescribed face cycles cannot be glued to a sphere."""
    pass


class NotPlanarError(PlanarError):
    pass


class NotIncidentError(PlanarError):
    pass


# ==== framework errors ==================================================================

class FrameworkError(Embed3Error):
    """Base class for failures around rotation frameworks."""
    pass


class FacesAtEdgeNotCycleError(FrameworkError):
    pass


class PrescribedDualFailureError(FrameworkError):
    pass


class CompatibilityViolationError(FrameworkError):
    """Raised when the two rotators at an edge neither agree nor are reverse."""
    pass


class DegenerateDegreesError(FrameworkError):
    pass


class HostMismatchError(FrameworkError):
    pass


class HypothesisFailureError(FrameworkError):
    pass


class NotSparseError(Embed3Error):
    """Raised when a vector family is required to be sparse but is not."""
    exit_code = ExitCode.InputError


# ==== conversion functions ==============================================================

def os_to_embed3_error(exc, path=None):
    """
    Gets the OSError and tries to add a reasonably informative error message.

    :param OSError exc: Python Exception.
    :param str path: Path of the file which triggered the error.
    :returns: :class:`FileError` instance or :class:`OSError` instance.
    """

    title = f'Cannot access "{path}"' if path else 'Cannot access file'

    if isinstance(exc, PermissionError):
        text = 'Insufficient read or write permissions for this location.'
    elif isinstance(exc, FileNotFoundError):
        text = 'The given path does not exist.'
    elif isinstance(exc, IsADirectoryError):
        text = 'The given path refers to a folder.'
    elif isinstance(exc, NotADirectoryError):
        text = 'The given path refers to a file.'
    elif exc.errno == errno.ENAMETOOLONG:
        text = 'The file name (including path) is too long.'
    elif exc.errno == errno.ENOSPC:
        text = 'There is not enough space left on the selected drive.'
    else:
        return exc

    return FileError(title, text)


# raised by construct_rotation_framework and junkify, reported as pipeline stage failures
FRAMEWORK_ERRORS = (
    FacesAtEdgeNotCycleError,
    PrescribedDualFailureError,
    CompatibilityViolationError,
    DegenerateDegreesError,
    HypothesisFailureError,
)
