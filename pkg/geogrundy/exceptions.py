"""
Error types shared by the library and the command line.

Every error carries a human-readable ``detail`` and the process exit code
the CLI uses when the error reaches it.
"""


class GeoGrundyError(Exception):
    """Base error with a detail message and an exit code"""

    exit_code = 2

    def __init__(self, detail: str, exit_code: int | None = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "detail": self.detail, "exit_code": self.exit_code}


class InputError(GeoGrundyError):
    """Bad parameters, malformed files or invalid point sets"""


class GenerationError(GeoGrundyError):
    """A point generator ran out of retries"""


class QuadrupleNotFoundError(GeoGrundyError):
    """No certified convex quadruple within the search budget"""


class OracleSizeError(GeoGrundyError):
    """Instance too large for exhaustive search"""


class CertificationError(GeoGrundyError):
    """A coloring failed certification"""

    exit_code = 1
