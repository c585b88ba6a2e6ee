#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "jobgate/bindgen/emit.hpp"
#include "jobgate/bindgen/manifest.hpp"
#include "jobgate/version.hpp"

using namespace jobgate::bindgen;

namespace {

const char* const kExample = "library jobgate\nversion 1.0.0 2024-01-01\nservice swap base 0 stages 4";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string source(const std::string& rel) { return std::string(JOBGATE_SOURCE_DIR) + "/" + rel; }

int error_line(std::string_view text) {
  try {
    parse_manifest(text);
  } catch (const ManifestError& e) {
    return e.line();
  }
  return -1;
}

std::string error_message(std::string_view text) {
  try {
    parse_manifest(text);
  } catch (const ManifestError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(ParseManifest, Example) {
  const Manifest m = parse_manifest(kExample);
  EXPECT_EQ(m.library_name, "jobgate");
  EXPECT_EQ(m.version, (LibraryVersion{1, 0, 0, "2024-01-01"}));
  ASSERT_EQ(m.services.size(), 1u);
  EXPECT_EQ(m.services[0], (ServiceSummary{"swap", 0, 4}));
  EXPECT_EQ(print_manifest(m), std::string(kExample) + "\n");
}

TEST(ParseManifest, CommentsAndBlankLines) {
  const Manifest m = parse_manifest(
      "# header comment\n\nlibrary  demo   # trailing\n\tversion 2.10.3 2021-06-30\n\n"
      "service swap base 0 stages 3\r\nservice b2 base 1230 stages 1\n# done");
  EXPECT_EQ(m.library_name, "demo");
  EXPECT_EQ(m.version.number(), "2.10.3");
  ASSERT_EQ(m.services.size(), 2u);
  EXPECT_EQ(m.services[1], (ServiceSummary{"b2", 1230, 1}));
}

TEST(ParseManifest, MissingLibrary) {
  const std::string msg = error_message("service swap base 0 stages 4");
  EXPECT_NE(msg.find("missing required directive: library"), std::string::npos) << msg;
  EXPECT_EQ(error_line("service swap base 0 stages 4"), 0);
}

TEST(ParseManifest, MissingVersionAndServices) {
  EXPECT_NE(error_message("library x\nservice a base 0 stages 1").find("version"), std::string::npos);
  EXPECT_NE(error_message("library x\nversion 1.0.0 2024-01-01\n").find("service"), std::string::npos);
}

TEST(ParseManifest, DuplicateBaseCitesSecondLine) {
  const std::string text =
      "library jobgate\nversion 1.0.0 2024-01-01\nservice swap base 0 stages 4\n\nservice other base 0 stages 4\n";
  EXPECT_EQ(error_line(text), 5);
  const std::string msg = error_message(text);
  EXPECT_NE(msg.find("line 5"), std::string::npos) << msg;
  EXPECT_NE(msg.find("duplicate base 0"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(ParseManifest, LineErrors) {
  const std::string head = "library jobgate\nversion 1.0.0 2024-01-01\n";
  EXPECT_EQ(error_line(head + "frobnicate\n"), 3);
  EXPECT_EQ(error_line(head + "service Swap base 0 stages 4\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base 15 stages 4\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base -10 stages 4\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base 0 stages 5\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base 0 stages 0\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base 0\n"), 3);
  EXPECT_EQ(error_line(head + "service swap at 0 stages 4\n"), 3);
  EXPECT_EQ(error_line(head + "service swap base 0 stages 4\nservice swap base 10 stages 4\n"), 4);
  EXPECT_EQ(error_line(head + "library again\n"), 3);
  EXPECT_EQ(error_line(head + "version 1.0.1 2024-01-02\n"), 3);
  EXPECT_EQ(error_line("library 1bad\n"), 1);
  EXPECT_EQ(error_line("library a b\n"), 1);
  EXPECT_EQ(error_line("library a\nversion 1.0 2024-01-01\n"), 2);
  EXPECT_EQ(error_line("library a\nversion 1.0.x 2024-01-01\n"), 2);
  EXPECT_EQ(error_line("library a\nversion 1.0.0 2024-13-01\n"), 2);
  EXPECT_EQ(error_line("library a\nversion 1.0.0 24-01-01\n"), 2);
  EXPECT_EQ(error_line("library a\nversion 1.0.0\n"), 2);
}

TEST(PrintManifest, RoundTripIsFixedPoint) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<int> stages(1, 4);
  std::uniform_int_distribution<int> num(0, 99);
  for (int i = 0; i < 200; ++i) {
    Manifest m;
    m.library_name = "lib" + std::to_string(i);
    m.version = {num(rng), num(rng), num(rng), "2024-0" + std::to_string(1 + i % 9) + "-1" + std::to_string(i % 10)};
    const int n = count(rng);
    for (int k = 0; k < n; ++k) m.services.push_back({"s" + std::to_string(k), 10 * (k * 7 + num(rng) * 100), stages(rng)});
    const std::string text = print_manifest(m);
    const Manifest parsed = parse_manifest(text);
    ASSERT_EQ(parsed, m);
    ASSERT_EQ(print_manifest(parsed), text);
  }
}

TEST(EmitHeader, GuardAndDeclarations) {
  const std::string h = emit_header(parse_manifest(kExample));
  EXPECT_NE(h.find("#ifndef JOBGATE_H\n#define JOBGATE_H\n"), std::string::npos);
  EXPECT_NE(h.find("int32_t gate_init(void);"), std::string::npos);
  EXPECT_NE(h.find("int32_t gate_final(void);"), std::string::npos);
  EXPECT_NE(h.find("int32_t gate_call(int32_t job, int32_t size, int32_t *data, int32_t verbose);"), std::string::npos);
  EXPECT_NE(h.find(" * service swap\n *   base 0, stages 4\n"), std::string::npos);
  EXPECT_EQ(h, emit_header(parse_manifest(kExample)));
}

TEST(EmitHeader, GuardFollowsLibraryName) {
  const Manifest m = parse_manifest("library my_lib2\nversion 0.1.0 2024-01-01\nservice a base 0 stages 2");
  const std::string h = emit_header(m);
  EXPECT_EQ(header_guard(m), "MY_LIB2_H");
  EXPECT_NE(h.find("#endif /* MY_LIB2_H */\n"), std::string::npos);
  EXPECT_NE(h.find(" *   job 1  compute\n"), std::string::npos);
  EXPECT_EQ(h.find(" *   job 2"), std::string::npos);
}

TEST(EmitStub, JuliaCallSiteArgumentOrder) {
  const std::string jl = emit_client_stub(parse_manifest(kExample), "jl");
  EXPECT_NE(jl.find("(Cint, Cint, Ptr{Cint}, Cint), job, size, buffer, verbose ? 1 : 0)"), std::string::npos);
  EXPECT_NE(jl.find("ccall((:gate_call, LIBRARY)"), std::string::npos);
  EXPECT_NE(jl.find("swap(text::AbstractString = \"\"; verbose::Bool = false)"), std::string::npos);
  EXPECT_NE(jl.find("\"JOBGATE_LIBRARY\""), std::string::npos);
}

TEST(EmitStub, PythonWrapsFourArgumentEntryPoint) {
  const std::string py = emit_client_stub(parse_manifest(kExample), "py");
  EXPECT_NE(py.find("lib.gate_call.argtypes = [ctypes.c_int32, ctypes.c_int32,\n"
                    "                                  ctypes.POINTER(ctypes.c_int32), ctypes.c_int32]"),
            std::string::npos);
  EXPECT_NE(py.find("lib.gate_call(job, size, data, 1 if verbose else 0)"), std::string::npos);
  EXPECT_NE(py.find("def swap(text=\"\", verbose=False):"), std::string::npos);
}

TEST(EmitStub, UnknownDialect) {
  try {
    emit_client_stub(parse_manifest(kExample), "rb");
    FAIL() << "expected DialectError";
  } catch (const DialectError& e) {
    EXPECT_STREQ(e.what(), "unsupported dialect: rb (supported: py, jl)");
  }
}

TEST(EmitStub, ReservedNamesAreSuffixed) {
  const Manifest m = parse_manifest(
      "library x\nversion 1.0.0 2024-01-01\nservice class base 0 stages 4\nservice end base 10 stages 4\n");
  const std::string py = emit_client_stub(m, "py");
  const std::string jl = emit_client_stub(m, "jl");
  EXPECT_NE(py.find("def class_("), std::string::npos);
  EXPECT_NE(py.find("def end("), std::string::npos);
  EXPECT_NE(jl.find("\nclass(text"), std::string::npos);
  EXPECT_NE(jl.find("\nend_(text"), std::string::npos);
  EXPECT_NE(jl.find("module X\n"), std::string::npos);
}

TEST(Golden, CommittedBindingsMatchShippedManifest) {
  const Manifest m = parse_manifest(slurp(source("manifests/jobgate.mf")));
  EXPECT_EQ(emit_header(m), slurp(source("bindings/jobgate.h")));
  EXPECT_EQ(emit_client_stub(m, "py"), slurp(source("bindings/jobgate.py")));
  EXPECT_EQ(emit_client_stub(m, "jl"), slurp(source("bindings/jobgate.jl")));
}

TEST(Golden, ShippedManifestMatchesLibraryVersion) {
  const Manifest m = parse_manifest(slurp(source("manifests/jobgate.mf")));
  EXPECT_EQ(m.library_name, "jobgate");
  EXPECT_EQ("JOBGATEv" + m.version.number() + " released " + m.version.date, std::string(jobgate::kVersionLine));
  ASSERT_EQ(m.services.size(), 3u);
  EXPECT_EQ(m.services[0], (ServiceSummary{"swap", 0, 4}));
  EXPECT_EQ(m.services[1], (ServiceSummary{"version", 40, 4}));
  EXPECT_EQ(m.services[2], (ServiceSummary{"polyroots", 50, 4}));
}
