// gcda: build, query, generate and benchmark document-listing indexes.
//
// Exit codes: 0 success, 1 runtime error, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcda/errors.hpp"
#include "gcda/index_io.hpp"
#include "gcda/listing.hpp"
#include "gcda/synth.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) gcda::fail(gcda::ErrorCode::IoError, "cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) gcda::fail(gcda::ErrorCode::IoError, "read failed: " + path);
  return ss.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) gcda::fail(gcda::ErrorCode::IoError, "cannot open: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) gcda::fail(gcda::ErrorCode::IoError, "cannot open for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) gcda::fail(gcda::ErrorCode::IoError, "write failed: " + path);
}

gcda::ListMode parse_mode(const std::string& mode) {
  if (mode == "gcda") return gcda::ListMode::Gcda;
  if (mode == "brute-c") return gcda::ListMode::BruteC;
  if (mode == "brute-d") return gcda::ListMode::BruteD;
  gcda::fail(gcda::ErrorCode::InvalidParameter, "unknown mode: " + mode);
}

struct BuildArgs {
  std::string input;
  std::string input_mode = "dir";
  std::uint32_t sep_byte = 10;
  std::uint32_t b = gcda::kDefaultB;
  double beta = 4.0;
  std::string output;
};

int cmd_build(const BuildArgs& a) {
  gcda::DocumentCollection coll =
      a.input_mode == "dir"
          ? gcda::load_directory(a.input)
          : gcda::load_concat(read_file(a.input), static_cast<std::uint8_t>(a.sep_byte));
  const auto beta_milli = static_cast<std::uint64_t>(a.beta * 1000.0 + 0.5);
  gcda::BuildStats stats;
  gcda::Index idx = gcda::build_index(std::move(coll), a.b, beta_milli, &stats);
  gcda::save_index(idx, a.output);

  std::cout << "n=" << idx.coll.n() << '\n';
  std::cout << "d=" << idx.coll.d() << '\n';
  std::cout << "b=" << a.b << '\n';
  std::cout << "beta_milli=" << beta_milli << '\n';
  std::cout << "text_bytes=" << stats.space.text_bytes << '\n';
  std::cout << "sa_bytes=" << stats.space.sa_bytes << '\n';
  std::cout << "da_bytes=" << stats.space.da_bytes << '\n';
  std::cout << "grammar_bytes=" << stats.space.grammar_bytes << '\n';
  std::cout << "lists_bytes=" << stats.space.lists_bytes << '\n';
  std::cout << "index_bytes=" << stats.space.index_bytes() << '\n';
  std::cout << "core_rules=" << stats.core_rules << '\n';
  std::cout << "total_rules=" << stats.total_rules << '\n';
  std::cout << "height=" << stats.height << '\n';
  std::cout << "stored_lists=" << stats.doclists.n_stored << '\n';
  std::cout << "raw_list_elems=" << stats.doclists.raw_list_elems << '\n';
  return 0;
}

struct QueryArgs {
  std::string index;
  std::vector<std::string> patterns;
  std::string patterns_file;
  std::string mode = "gcda";
};

int cmd_query(const QueryArgs& a) {
  const gcda::Index idx = gcda::load_index(a.index);
  const gcda::ListMode mode = parse_mode(a.mode);
  std::vector<std::string> patterns = a.patterns;
  if (!a.patterns_file.empty()) {
    auto more = read_lines(a.patterns_file);
    patterns.insert(patterns.end(), more.begin(), more.end());
  }
  for (const std::string& p : patterns) {
    const auto docs = gcda::list_documents(idx, p, mode);
    std::cout << p << '\t';
    for (std::size_t i = 0; i < docs.size(); ++i) {
      if (i > 0) std::cout << ' ';
      std::cout << docs[i];
    }
    std::cout << '\n';
  }
  return 0;
}

struct GenArgs {
  gcda::synth::SynthSpec spec;
  std::string mode = "version";
  std::string seed_text_path;
  std::uint32_t sep_byte = 10;
  std::string output;
};

int cmd_gen(GenArgs& a) {
  a.spec.mode = a.mode == "version" ? gcda::synth::Mode::Version : gcda::synth::Mode::Concat;
  if (!a.seed_text_path.empty()) {
    const std::string bytes = read_file(a.seed_text_path);
    a.spec.seed_text.assign(bytes.begin(), bytes.end());
  }
  const gcda::DocumentCollection coll = gcda::synth::generate(a.spec);

  // Concat file format: every terminator becomes the separator byte.
  std::string out;
  out.reserve(coll.text.size());
  for (std::uint8_t c : coll.text)
    out.push_back(c == gcda::kTerminator ? static_cast<char>(a.sep_byte)
                                         : static_cast<char>(c));
  write_file(a.output, out);
  write_file(a.output + ".manifest",
             gcda::synth::manifest_text(a.spec, static_cast<std::uint8_t>(a.sep_byte)));
  std::cout << "n=" << coll.n() << '\n';
  std::cout << "d=" << coll.d() << '\n';
  std::cout << "output=" << a.output << '\n';
  return 0;
}

struct BenchArgs {
  std::string index;
  std::string patterns_file;
  std::uint32_t repeat = 1;
};

int cmd_bench(const BenchArgs& a) {
  const gcda::Index idx = gcda::load_index(a.index);
  const auto patterns = read_lines(a.patterns_file);
  std::cout << "pattern_len,occ,docc,mode,microseconds\n";
  for (const std::string& p : patterns) {
    const auto range = gcda::pattern_range(idx.sfx, idx.coll, p);
    const std::uint64_t occ = range ? range->second - range->first + 1 : 0;
    for (const char* mode : {"gcda", "brute-c", "brute-d"}) {
      std::vector<std::uint32_t> docs;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::uint32_t r = 0; r < a.repeat; ++r)
        docs = gcda::list_documents(idx, p, parse_mode(mode));
      const auto t1 = std::chrono::steady_clock::now();
      const double us =
          std::chrono::duration<double, std::micro>(t1 - t0).count() / a.repeat;
      char us_text[32];
      std::snprintf(us_text, sizeof us_text, "%.3f", us);
      std::cout << p.size() << ',' << occ << ',' << docs.size() << ',' << mode << ','
                << us_text << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Document listing over repetitive collections via a "
               "grammar-compressed document array"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* cb = app.add_subcommand("build", "Index a document collection");
  cb->add_option("--input", build.input, "Input directory or concat file")->required();
  cb->add_option("--input-mode", build.input_mode, "How to read --input")
      ->check(CLI::IsMember({"dir", "concat"}));
  cb->add_option("--sep-byte", build.sep_byte, "Separator byte for concat input")
      ->check(CLI::Range(1u, 255u));
  cb->add_option("--b", build.b, "Sampling leaf bound")->check(CLI::Range(1u, 1u << 30));
  cb->add_option("--beta", build.beta, "Sampling merge factor")
      ->check(CLI::Range(1.0, 1e6));
  cb->add_option("--output", build.output, "Index file to write")->required();

  QueryArgs query;
  auto* cq = app.add_subcommand("query", "List documents containing patterns");
  cq->add_option("--index", query.index, "Index file")->required();
  auto* opt_pat = cq->add_option("--pattern", query.patterns, "Pattern (repeatable)");
  auto* opt_file = cq->add_option("--patterns-file", query.patterns_file,
                                  "File with one pattern per line");
  cq->add_option("--mode", query.mode, "Query algorithm")
      ->check(CLI::IsMember({"gcda", "brute-c", "brute-d"}));

  GenArgs gen;
  auto* cg = app.add_subcommand("gen", "Generate a synthetic repetitive collection");
  cg->add_option("--mode", gen.mode, "Collection flavor")
      ->check(CLI::IsMember({"version", "concat"}));
  cg->add_option("--bases", gen.spec.base_count, "Number of base documents")
      ->check(CLI::Range(1u, 1u << 20));
  cg->add_option("--base-len", gen.spec.base_len, "Length of each base")
      ->check(CLI::Range(1u, 1u << 26));
  cg->add_option("--variants", gen.spec.variants_per_base, "Variants per base")
      ->check(CLI::Range(1u, 1u << 20));
  cg->add_option("--rate", gen.spec.mutation_rate, "Per-symbol mutation probability")
      ->check(CLI::Range(1e-9, 0.999999));
  cg->add_option("--sigma", gen.spec.sigma, "Alphabet size")->check(CLI::Range(2u, 25u));
  cg->add_option("--seed", gen.spec.rng_seed, "RNG seed");
  cg->add_option("--seed-text", gen.seed_text_path, "Slice bases from this file");
  cg->add_option("--sep-byte", gen.sep_byte, "Separator byte for the output file")
      ->check(CLI::Range(1u, 255u));
  cg->add_option("--output", gen.output, "Collection file to write")->required();

  BenchArgs bench;
  auto* cn = app.add_subcommand("bench", "Time queries in every mode, CSV output");
  cn->add_option("--index", bench.index, "Index file")->required();
  cn->add_option("--patterns-file", bench.patterns_file, "File with one pattern per line")
      ->required();
  cn->add_option("--repeat", bench.repeat, "Repetitions per measurement")
      ->check(CLI::Range(1u, 1u << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cb->parsed()) return cmd_build(build);
    if (cq->parsed()) {
      if (opt_pat->count() == 0 && opt_file->count() == 0) {
        std::cerr << "query: provide --pattern or --patterns-file\n";
        return 2;
      }
      return cmd_query(query);
    }
    if (cg->parsed()) return cmd_gen(gen);
    if (cn->parsed()) return cmd_bench(bench);
  } catch (const gcda::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
