// Python bindings for the document-listing index. Mirrors the C++ surface:
// build/load an index, list documents in any mode, generate synthetic
// collections, and sample patterns.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcda/errors.hpp"
#include "gcda/index_io.hpp"
#include "gcda/listing.hpp"
#include "gcda/synth.hpp"

namespace py = pybind11;

namespace {

gcda::ListMode parse_mode(const std::string& mode) {
  if (mode == "gcda") return gcda::ListMode::Gcda;
  if (mode == "brute-c") return gcda::ListMode::BruteC;
  if (mode == "brute-d") return gcda::ListMode::BruteD;
  gcda::fail(gcda::ErrorCode::InvalidParameter, "unknown mode: " + mode);
}

gcda::synth::SynthSpec make_spec(const std::string& mode, std::uint32_t bases,
                                 std::uint32_t base_len, std::uint32_t variants, double rate,
                                 std::uint32_t sigma, std::uint64_t seed) {
  if (mode != "version" && mode != "concat")
    gcda::fail(gcda::ErrorCode::InvalidSpec, "mode must be 'version' or 'concat'");
  gcda::synth::SynthSpec spec;
  spec.mode = mode == "version" ? gcda::synth::Mode::Version : gcda::synth::Mode::Concat;
  spec.base_count = bases;
  spec.base_len = base_len;
  spec.variants_per_base = variants;
  spec.mutation_rate = rate;
  spec.sigma = sigma;
  spec.rng_seed = seed;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_gcda, m) {
  m.doc() = "Document listing over repetitive collections via a "
            "grammar-compressed document array";

  py::register_exception<gcda::Error>(m, "GcdaError");

  py::class_<gcda::Index>(m, "Index")
      .def_property_readonly("n", [](const gcda::Index& idx) { return idx.coll.n(); })
      .def_property_readonly("d", [](const gcda::Index& idx) { return idx.coll.d(); })
      .def(
          "list",
          [](const gcda::Index& idx, const std::string& pattern, const std::string& mode) {
            return gcda::list_documents(idx, pattern, parse_mode(mode));
          },
          py::arg("pattern"), py::arg("mode") = "gcda",
          "Distinct documents (1-based, ascending) containing the pattern")
      .def(
          "documents",
          [](const gcda::Index& idx) { return gcda::split(idx.coll); },
          "The indexed documents, in order")
      .def(
          "space",
          [](const gcda::Index& idx) {
            const gcda::SpaceReport r = gcda::measure_space(idx);
            py::dict d;
            d["text_bytes"] = r.text_bytes;
            d["sa_bytes"] = r.sa_bytes;
            d["da_bytes"] = r.da_bytes;
            d["grammar_bytes"] = r.grammar_bytes;
            d["lists_bytes"] = r.lists_bytes;
            d["index_bytes"] = r.index_bytes();
            return d;
          },
          "In-memory component sizes in bytes")
      .def("save", [](const gcda::Index& idx, const std::string& path) {
        gcda::save_index(idx, path);
      });

  m.def(
      "build_index",
      [](const std::vector<std::string>& docs, std::uint32_t b, double beta) {
        return gcda::build_index(gcda::load_documents(docs), b,
                                 static_cast<std::uint64_t>(beta * 1000.0 + 0.5));
      },
      py::arg("docs"), py::arg("b") = gcda::kDefaultB, py::arg("beta") = 4.0,
      "Index a list of documents");

  m.def("load_index", &gcda::load_index, py::arg("path"));

  m.def(
      "generate",
      [](const std::string& mode, std::uint32_t bases, std::uint32_t base_len,
         std::uint32_t variants, double rate, std::uint32_t sigma, std::uint64_t seed) {
        return gcda::split(
            gcda::synth::generate(make_spec(mode, bases, base_len, variants, rate, sigma, seed)));
      },
      py::arg("mode") = "version", py::arg("bases") = 10, py::arg("base_len") = 1000,
      py::arg("variants") = 10, py::arg("rate") = 0.01, py::arg("sigma") = 4,
      py::arg("seed") = 1, "Generate a synthetic repetitive collection as a list of documents");

  m.def(
      "sample_patterns",
      [](const std::vector<std::string>& docs, std::uint32_t count, std::uint32_t min_len,
         std::uint32_t max_len, std::uint64_t seed) {
        gcda::synth::Rng rng(seed);
        return gcda::synth::sample_patterns(gcda::load_documents(docs), count, min_len, max_len,
                                            rng);
      },
      py::arg("docs"), py::arg("count"), py::arg("min_len"), py::arg("max_len"),
      py::arg("seed") = 1, "Sample patterns that are guaranteed to occur");
}
