#pragma once

// Emitters for the C header and the scripting-language client stubs. Every
// emitter is a pure function of the manifest.

#include <algorithm>
#include <array>
#include <iterator>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jobgate/bindgen/manifest.hpp"
#include "jobgate/status.hpp"

namespace jobgate::bindgen {

class DialectError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::array<std::string_view, 2> kDialects = {"py", "jl"};
inline constexpr std::string_view kGenerator = "jobgate-bindgen";

namespace detail {

inline constexpr std::array<std::string_view, 4> kStageNames = {"initialize", "compute", "retrieve",
                                                                 "output size"};

inline std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

// my_lib -> MyLib
inline std::string camel(std::string_view s) {
  std::string out;
  bool cap = true;
  for (char c : s) {
    if (c == '_') {
      cap = true;
      continue;
    }
    out.push_back(cap ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
    cap = false;
  }
  return out;
}

template <std::size_t N>
bool contains(const std::string_view (&words)[N], std::string_view w) {
  return std::find(std::begin(words), std::end(words), w) != std::end(words);
}

// Keywords, plus builtins and helper names each stub relies on.
inline constexpr std::string_view kPythonReserved[] = {
    "and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del", "elif",
    "else", "except", "finally", "for", "from", "global", "if", "import", "in", "is", "lambda",
    "nonlocal", "not", "or", "pass", "raise", "return", "try", "while", "with", "yield", "ctypes",
    "os", "sys", "load", "close", "library_filename", "library_path", "ord", "chr", "max",
    "range", "enumerate", "super"};

inline constexpr std::string_view kJuliaReserved[] = {
    "baremodule", "begin", "break", "catch", "const", "continue", "do", "else", "elseif", "end",
    "export", "false", "finally", "for", "function", "global", "if", "import", "let", "local",
    "macro", "module", "quote", "return", "struct", "true", "try", "using", "while", "abstract",
    "mutable", "primitive", "type", "where", "outer", "gate_init", "gate_final", "call",
    "run_stages", "library_filename", "library_path", "initialized", "isempty", "normpath",
    "joinpath", "isfile", "length", "max", "zeros", "fill", "throw", "ccall"};

inline std::string python_name(std::string_view name) {
  return contains(kPythonReserved, name) ? std::string(name) + "_" : std::string(name);
}

inline std::string julia_name(std::string_view name) {
  return contains(kJuliaReserved, name) ? std::string(name) + "_" : std::string(name);
}

inline std::string job_map_line(const ServiceSummary& s) {
  return s.name + " base " + std::to_string(s.base) + " stages " + std::to_string(s.stages);
}

}  // namespace detail

inline std::string header_guard(const Manifest& m) { return detail::upper(m.library_name) + "_H"; }

inline std::string emit_header(const Manifest& m) {
  const std::string guard = header_guard(m);
  std::string out;
  out += "/* " + m.library_name + ".h: generated by " + std::string(kGenerator) + ", do not edit. */\n";
  out += "#ifndef " + guard + "\n";
  out += "#define " + guard + "\n\n";
  out += "#include <stdint.h>\n\n";
  out += "#ifdef __cplusplus\nextern \"C\" {\n#endif\n\n";
  out += "/*\n";
  out += " * library " + m.library_name + ", version " + m.version.number() + " released " + m.version.date + "\n";
  out += " *\n";
  out += " * A job code is a service base plus a stage:\n";
  out += " *   stage 0  initialize   copy data[0..size) into the service input\n";
  out += " *   stage 1  compute      run the service on the stored input\n";
  out += " *   stage 2  retrieve     copy the stored output into data[0..size)\n";
  out += " *   stage 3  output size  write the output length into data[0]\n";
  out += " *\n";
  out += " * Status codes:\n";
  for (int code = 0; code <= 6; ++code) {
    out += " *   " + std::to_string(code) + "  " + std::string(describe(static_cast<GateStatus>(code))) + "\n";
  }
  out += " */\n\n";
  for (const auto& s : m.services) {
    out += "/*\n";
    out += " * service " + s.name + "\n";
    out += " *   base " + std::to_string(s.base) + ", stages " + std::to_string(s.stages) + "\n";
    for (int stage = 0; stage < s.stages; ++stage) {
      out += " *   job " + std::to_string(s.base + stage) + "  " + std::string(detail::kStageNames[stage]) + "\n";
    }
    out += " */\n\n";
  }
  out += "int32_t gate_init(void);\n";
  out += "int32_t gate_final(void);\n";
  out += "int32_t gate_call(int32_t job, int32_t size, int32_t *data, int32_t verbose);\n\n";
  out += "#ifdef __cplusplus\n}\n#endif\n\n";
  out += "#endif /* " + guard + " */\n";
  return out;
}

inline std::string emit_python_stub(const Manifest& m) {
  const std::string env = detail::upper(m.library_name) + "_LIBRARY";
  std::string out;
  out += "# " + m.library_name + ".py: generated by " + std::string(kGenerator) + ", do not edit.\n";
  out += "\"\"\"Client bindings for the " + m.library_name + " library, version " + m.version.number() +
         " released " + m.version.date + ".\n\n";
  out += "Each service is one call that runs the staged protocol over gate_call:\n";
  out += "initialize, compute, output size, retrieve. Text goes in and comes out\n";
  out += "as one code point per 32-bit element.\n\n";
  out += "Job map:\n";
  for (const auto& s : m.services) out += "    " + detail::job_map_line(s) + "\n";
  out += "\"\"\"\n\n";
  out += "import ctypes\nimport os\nimport sys\n\n";
  out += "LIBRARY_NAME = \"" + m.library_name + "\"\n";
  out += "LIBRARY_ENV = \"" + env + "\"\n\n";
  out += R"PY(_lib = None


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
)PY";
  for (const auto& s : m.services) {
    out += "\n\ndef " + detail::python_name(s.name) + "(text=\"\", verbose=False):\n";
    out += "    \"\"\"Service " + s.name + ", jobs " + std::to_string(s.base) + " to " +
           std::to_string(s.base + s.stages - 1) + ".\"\"\"\n";
    out += "    return _run(" + std::to_string(s.base) + ", " + std::to_string(s.stages) + ", text, verbose)\n";
  }
  return out;
}

inline std::string emit_julia_stub(const Manifest& m) {
  const std::string env = detail::upper(m.library_name) + "_LIBRARY";
  std::string out;
  out += "# " + m.library_name + ".jl: generated by " + std::string(kGenerator) + ", do not edit.\n";
  out += "#\n";
  out += "# Client bindings for the " + m.library_name + " library, version " + m.version.number() +
         " released " + m.version.date + ".\n";
  out += "# Each service is one call running initialize, compute, output size and\n";
  out += "# retrieve over gate_call, text in and text out.\n";
  out += "#\n";
  out += "# Job map:\n";
  for (const auto& s : m.services) out += "#   " + detail::job_map_line(s) + "\n";
  out += "\nmodule " + detail::camel(m.library_name) + "\n\n";
  out += "export GateError";
  for (const auto& s : m.services) out += ", " + detail::julia_name(s.name);
  out += "\n\n";
  out += "const LIBRARY_NAME = \"" + m.library_name + "\"\n";
  out += "const LIBRARY_ENV = \"" + env + "\"\n\n";
  out += R"JL(struct GateError <: Exception
    status::Int32
    job::Int32
end

Base.showerror(io::IO, e::GateError) =
    e.job < 0 ? Base.print(io, "gate_init returned status ", e.status) :
                Base.print(io, "gate_call job ", e.job, " returned status ", e.status)

function library_filename()
    Sys.iswindows() && return "lib" * LIBRARY_NAME * ".dll"
    Sys.isapple() && return "lib" * LIBRARY_NAME * ".dylib"
    return "lib" * LIBRARY_NAME * ".so"
end

function library_path()
    override = Base.get(ENV, LIBRARY_ENV, "")
    isempty(override) || return override
    candidate = normpath(joinpath(@__DIR__, "..", "build", "lib", library_filename()))
    isfile(candidate) && return candidate
    return library_filename()
end

const LIBRARY = library_path()
const initialized = Ref(false)

function gate_init()
    status = ccall((:gate_init, LIBRARY), Cint, ())
    status == 0 || throw(GateError(status, -1))
    initialized[] = true
    return nothing
end

function gate_final()
    ccall((:gate_final, LIBRARY), Cint, ())
    initialized[] = false
    return nothing
end

function call(job::Integer, size::Integer, buffer::Vector{Cint}, verbose::Bool)
    initialized[] || gate_init()
    return ccall((:gate_call, LIBRARY), Cint,
                 (Cint, Cint, Ptr{Cint}, Cint), job, size, buffer, verbose ? 1 : 0)
end

function call!(job::Integer, size::Integer, buffer::Vector{Cint}, verbose::Bool)
    status = call(job, size, buffer, verbose)
    status == 0 || throw(GateError(status, job))
    return buffer
end

function run_stages(base::Integer, stages::Integer, text::AbstractString, verbose::Bool)
    data = Cint[Cint(c) for c in text]
    call!(base + 0, length(data), data, verbose)
    stages < 2 && return ""
    call!(base + 1, 0, Cint[0], verbose)
    stages < 3 && return ""
    if stages >= 4
        count = Cint[0]
        call!(base + 3, 1, count, verbose)
        n = Int(count[1])
        out = zeros(Cint, max(n, 1))
        call!(base + 2, n, out, verbose)
    else
        n = max(length(data), 16)
        while true
            out = fill(Cint(-1), n)
            status = call(base + 2, n, out, verbose)
            status == 0 && break
            status == 3 || throw(GateError(status, base + 2))
            n *= 2
        end
        while n > 0 && out[n] == -1
            n -= 1
        end
    end
    return String(Char[Char(out[i]) for i in 1:n])
end
)JL";
  for (const auto& s : m.services) {
    out += "\n\"Service " + s.name + ", jobs " + std::to_string(s.base) + " to " +
           std::to_string(s.base + s.stages - 1) + ".\"\n";
    out += detail::julia_name(s.name) + "(text::AbstractString = \"\"; verbose::Bool = false) =\n";
    out += "    run_stages(" + std::to_string(s.base) + ", " + std::to_string(s.stages) + ", text, verbose)\n";
  }
  out += "\nend # module\n";
  return out;
}

inline std::string emit_client_stub(const Manifest& m, std::string_view dialect) {
  if (dialect == "py") return emit_python_stub(m);
  if (dialect == "jl") return emit_julia_stub(m);
  throw DialectError("unsupported dialect: " + std::string(dialect) + " (supported: py, jl)");
}

/// Conventional output file name for a dialect, e.g. jobgate.py.
inline std::string stub_filename(const Manifest& m, std::string_view dialect) {
  return m.library_name + "." + std::string(dialect);
}

}  // namespace jobgate::bindgen
