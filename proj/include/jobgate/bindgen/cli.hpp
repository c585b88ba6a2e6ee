#pragma once

// jobgate-bindgen command line:
//
//   check  <manifest>                          parse and summarize
//   header <manifest> -o <path>                emit the C header
//   stub   <manifest> --dialect <d> -o <path>  emit a client stub (py, jl)
//
// Exit status is 0 on success, 1 on user error and 2 on internal error, with
// a single diagnostic line on the error stream.

#include <CLI11.hpp>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "jobgate/bindgen/emit.hpp"
#include "jobgate/bindgen/manifest.hpp"

#if defined(_WIN32)
#include <process.h>
#define JOBGATE_GETPID _getpid
#else
#include <unistd.h>
#define JOBGATE_GETPID getpid
#endif

namespace jobgate::bindgen {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUser = 1;
inline constexpr int kExitInternal = 2;

/// A failure caused by the command's inputs (exit status 1).
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read manifest " + path + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Manifest load_manifest(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_manifest(text);
  } catch (const ManifestError& e) {
    throw UserError(path + ": " + e.what());
  }
}

/// Writes through a temporary file in the target directory and renames it
/// into place. A path of "-" writes to `out` instead.
inline void write_atomically(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path == "-") {
    out << contents;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(JOBGATE_GETPID());
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw UserError("cannot write " + temp.string() + ": " + std::strerror(errno));
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw UserError("cannot write " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw UserError("cannot rename " + temp.string() + " to " + path + ": " + ec.message());
  }
}

inline std::string summarize(const Manifest& m) {
  std::string s = "library " + m.library_name + " version " + m.version.number() + " released " +
                  m.version.date + "\n";
  s += std::to_string(m.services.size()) + (m.services.size() == 1 ? " service\n" : " services\n");
  for (const auto& svc : m.services) {
    s += "  " + svc.name + " base " + std::to_string(svc.base) + " stages " + std::to_string(svc.stages) + "\n";
  }
  return s;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Generate the C header and client stubs for a jobgate service manifest", "jobgate-bindgen"};
  app.require_subcommand(1);

  std::string manifest_path;
  std::string output_path;
  std::string dialect;

  auto* check = app.add_subcommand("check", "Parse a manifest and print a summary");
  check->add_option("manifest", manifest_path, "Manifest file")->required();

  auto* header = app.add_subcommand("header", "Emit the C header");
  header->add_option("manifest", manifest_path, "Manifest file")->required();
  header->add_option("-o,--output", output_path, "Output path, or - for standard output")->required();

  auto* stub = app.add_subcommand("stub", "Emit a client stub");
  stub->add_option("manifest", manifest_path, "Manifest file")->required();
  stub->add_option("--dialect", dialect, "Stub language: py or jl")->required();
  stub->add_option("-o,--output", output_path, "Output path, or - for standard output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "jobgate-bindgen: " << e.what() << "\n";
    return kExitUser;
  }

  try {
    const Manifest m = load_manifest(manifest_path);
    if (check->parsed()) {
      out << summarize(m);
    } else if (header->parsed()) {
      write_atomically(output_path, emit_header(m), out);
    } else if (stub->parsed()) {
      write_atomically(output_path, emit_client_stub(m, dialect), out);
    }
    return kExitOk;
  } catch (const UserError& e) {
    err << "jobgate-bindgen: " << e.what() << "\n";
    return kExitUser;
  } catch (const DialectError& e) {
    err << "jobgate-bindgen: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    err << "jobgate-bindgen: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (...) {
    err << "jobgate-bindgen: internal error\n";
    return kExitInternal;
  }
}

}  // namespace jobgate::bindgen
