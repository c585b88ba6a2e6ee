# jobgate.py: generated by jobgate-bindgen, do not edit.
"""Client bindings for the jobgate library, version 1.0.0 released 2026-10-14.

Each service is one call that runs the staged protocol over gate_call:
initialize, compute, output size, retrieve. Text goes in and comes out
as one code point per 32-bit element.

Job map:
    swap base 0 stages 4
    version base 40 stages 4
    polyroots base 50 stages 4
"""

import ctypes
import os
import sys

LIBRARY_NAME = "jobgate"
LIBRARY_ENV = "JOBGATE_LIBRARY"

_lib = None


class GateError(RuntimeError):
    """A nonzero status from the gate."""

    def __init__(self, status, job=None):
        if job is None:
            message = "gate_init returned status %d" % status
        else:
            message = "gate_call job %d returned status %d" % (job, status)
        super().__init__(message)
        self.status = status
        self.job = job


def library_filename():
    if sys.platform.startswith("win"):
        return "lib" + LIBRARY_NAME + ".dll"
    if sys.platform == "darwin":
        return "lib" + LIBRARY_NAME + ".dylib"
    return "lib" + LIBRARY_NAME + ".so"


def library_path():
    override = os.environ.get(LIBRARY_ENV)
    if override:
        return override
    here = os.path.dirname(os.path.abspath(__file__))
    candidate = os.path.normpath(os.path.join(here, os.pardir, "build", "lib", library_filename()))
    if os.path.exists(candidate):
        return candidate
    return library_filename()


def load(path=None):
    """Loads the shared library once and initializes the gate."""
    global _lib
    if _lib is None:
        lib = ctypes.CDLL(path or library_path())
        lib.gate_init.argtypes = []
        lib.gate_init.restype = ctypes.c_int32
        lib.gate_final.argtypes = []
        lib.gate_final.restype = ctypes.c_int32
        lib.gate_call.argtypes = [ctypes.c_int32, ctypes.c_int32,
                                  ctypes.POINTER(ctypes.c_int32), ctypes.c_int32]
        lib.gate_call.restype = ctypes.c_int32
        status = lib.gate_init()
        if status != 0:
            raise GateError(status)
        _lib = lib
    return _lib


def close():
    global _lib
    if _lib is not None:
        _lib.gate_final()
        _lib = None


def _buffer(values, size, fill=0):
    data = (ctypes.c_int32 * max(size, 1))(*([fill] * max(size, 1)))
    for i, v in enumerate(values):
        data[i] = v
    return data


def _call(lib, job, size, data, verbose):
    status = lib.gate_call(job, size, data, 1 if verbose else 0)
    if status != 0:
        raise GateError(status, job)


def _run(base, stages, text, verbose):
    lib = load()
    codes = [ord(ch) for ch in text]
    data = _buffer(codes, len(codes))
    _call(lib, base + 0, len(codes), data, verbose)
    if stages < 2:
        return ""
    _call(lib, base + 1, 0, data, verbose)
    if stages < 3:
        return ""
    if stages >= 4:
        count = _buffer([], 1)
        _call(lib, base + 3, 1, count, verbose)
        n = count[0]
        out = _buffer([], n)
        _call(lib, base + 2, n, out, verbose)
    else:
        n = max(len(codes), 16)
        while True:
            out = _buffer([], n, -1)
            status = lib.gate_call(base + 2, n, out, 1 if verbose else 0)
            if status == 0:
                break
            if status != 3:
                raise GateError(status, base + 2)
            n *= 2
        while n > 0 and out[n - 1] == -1:
            n -= 1
    return "".join(chr(out[i]) for i in range(n))


def swap(text="", verbose=False):
    """Service swap, jobs 0 to 3."""
    return _run(0, 4, text, verbose)


def version(text="", verbose=False):
    """Service version, jobs 40 to 43."""
    return _run(40, 4, text, verbose)


def polyroots(text="", verbose=False):
    """Service polyroots, jobs 50 to 53."""
    return _run(50, 4, text, verbose)
