// sosq: command-line front end over the C API.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage, schema, structural or domain error, 3 resource limit reached
// (size cap exceeded, search budget exhausted).

#include <sosq/sosq.h>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct SystemDeleter {
  void operator()(sosq_system s) const { sosq_system_free(s); }
};
using System = std::unique_ptr<sosq_system_s, SystemDeleter>;

struct StringDeleter {
  void operator()(char *s) const { sosq_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

class CliError : public std::runtime_error {
public:
  CliError(int code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

private:
  int code_;
};

void check(sosq_status status, const std::string &context) {
  if (status == SOSQ_OK)
    return;
  const int code = status == SOSQ_ERR_RESOURCE ? kExitResource : kExitUsage;
  throw CliError(code, context + ": " + sosq_status_name(status) + ": " +
                           sosq_last_error());
}

std::string read_input(const std::string &path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw CliError(kExitUsage, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

System load(const std::string &path) {
  const std::string text = read_input(path);
  sosq_system sys = nullptr;
  check(sosq_document_read(text.data(), text.size(), &sys), path);
  return System(sys);
}

void write_output(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw CliError(kExitUsage, "cannot write " + out_path);
  out << text;
}

void emit_document(const System &sys, const std::string &out_path) {
  char *raw = nullptr;
  check(sosq_document_write(sys.get(), &raw), "serialize");
  CString doc(raw);
  write_output(doc.get(), out_path);
}

std::string size_string(const System &sys) {
  size_t r = 0, s = 0, n = 0;
  sosq_system_size(sys.get(), &r, &s, &n);
  return "[" + std::to_string(r) + ", " + std::to_string(s) + ", " +
         std::to_string(n) + "]";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Construct, combine and verify sum-of-squares formulas"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t size_cap = sosq_default_max_rows();
  std::string out_path;
  app.add_option("--size-cap", size_cap,
                 "Largest row count any construction may produce")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--out", out_path, "Write documents to this file");

  // gen classical D | gen hr M
  std::string gen_kind;
  unsigned gen_value = 0;
  auto *gen = app.add_subcommand("gen", "Generate a base system");
  gen->add_option("kind", gen_kind, "classical or hr")
      ->required()
      ->check(CLI::IsMember({"classical", "hr"}));
  gen->add_option("value", gen_value, "dimension (classical) or exponent (hr)")
      ->required();

  std::string file_a, file_b;
  std::size_t special = 1;
  auto *dbl = app.add_subcommand("double", "[r,s,n] -> [r+1,2s,2n]");
  dbl->add_option("file", file_a, "Input document ('-' for stdin)")
      ->required();
  dbl->add_option("--special", special, "1-based index of the special matrix")
      ->check(CLI::PositiveNumber);

  auto *comb =
      app.add_subcommand("combine", "[r,s,n] + [r',s',n'] -> [r+r',2ss',2nn']");
  comb->add_option("fileA", file_a)->required();
  comb->add_option("fileB", file_b)->required();

  unsigned extend_k = 0;
  auto *ext = app.add_subcommand(
      "extend", "[r,s,n] -> [r+rho(2^(k-1)),2^k s,2^k n]");
  ext->add_option("file", file_a)->required();
  ext->add_option("--k", extend_k)->required()->check(CLI::PositiveNumber);

  bool use_oracle = false;
  auto *ver = app.add_subcommand("verify", "Check the Hurwitz equations");
  ver->add_option("file", file_a)->required();
  ver->add_flag("--oracle", use_oracle,
                "Also expand and compare the polynomial identity");

  std::uint64_t rho_n = 0;
  auto *rho = app.add_subcommand("rho", "Hurwitz-Radon function");
  rho->add_option("n", rho_n)->required();

  std::string format = "text";
  auto *emit = app.add_subcommand("emit", "Render the identity");
  emit->add_option("file", file_a)->required();
  emit->add_option("--format", format)->check(
      CLI::IsMember({"text", "latex"}));

  std::size_t search_s = 0, search_n = 0;
  std::uint64_t budget = 0;
  auto *search = app.add_subcommand(
      "search", "Exhaustive search for the largest integer [r,s,n]");
  search->add_option("--s", search_s)->required()->check(CLI::PositiveNumber);
  search->add_option("--n", search_n)->required()->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "Branch-and-bound node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      sosq_system raw = nullptr;
      if (gen_kind == "classical")
        check(sosq_gen_classical(gen_value, &raw), "gen classical");
      else
        check(sosq_gen_hr_family(gen_value, size_cap, &raw), "gen hr");
      emit_document(System(raw), out_path);
    } else if (*dbl) {
      System in = load(file_a);
      sosq_system raw = nullptr;
      check(sosq_double(in.get(), special - 1, size_cap, &raw), "double");
      emit_document(System(raw), out_path);
    } else if (*comb) {
      System a = load(file_a);
      System b = load(file_b);
      sosq_system raw = nullptr;
      check(sosq_combine(a.get(), b.get(), size_cap, &raw), "combine");
      emit_document(System(raw), out_path);
    } else if (*ext) {
      System in = load(file_a);
      sosq_system raw = nullptr;
      check(sosq_extend(in.get(), extend_k, size_cap, &raw), "extend");
      emit_document(System(raw), out_path);
    } else if (*ver) {
      System in = load(file_a);
      char *raw = nullptr;
      const sosq_status st = sosq_verify(in.get(), use_oracle ? 1 : 0, &raw);
      if (st != SOSQ_VERIFY_FAILED)
        check(st, "verify");
      CString report(raw);
      std::cerr << "size " << size_string(in) << "\n" << report.get() << "\n";
      return st == SOSQ_OK ? kExitOk : kExitVerifyFailed;
    } else if (*rho) {
      std::uint64_t value = 0;
      check(sosq_rho(rho_n, &value), "rho");
      write_output(std::to_string(value) + "\n", out_path);
    } else if (*emit) {
      System in = load(file_a);
      char *raw = nullptr;
      check(sosq_render(in.get(),
                        format == "latex" ? SOSQ_FORMAT_LATEX
                                          : SOSQ_FORMAT_TEXT,
                        &raw),
            "emit");
      CString text(raw);
      write_output(std::string(text.get()) + "\n", out_path);
    } else if (*search) {
      sosq_search_result result{};
      sosq_system raw = nullptr;
      const sosq_status st =
          sosq_search(search_s, search_n, budget, &result, &raw);
      System witness(raw);
      const std::string label = "max_r(s=" + std::to_string(search_s) +
                                ", n=" + std::to_string(search_n) + ")";
      if (st == SOSQ_OK) {
        std::cerr << label << " = " << result.r_max << " (exhaustive; "
                  << result.nodes << " nodes, " << result.graph_vertices
                  << " graph vertices)\n";
      } else if (st == SOSQ_ERR_RESOURCE && result.r_max > 0) {
        std::cerr << label << " >= " << result.r_max
                  << " (inconclusive above r = " << result.r_max << ": "
                  << sosq_last_error() << ")\n";
      } else {
        check(st, "search");
      }
      if (witness)
        emit_document(witness, out_path);
      return st == SOSQ_OK ? kExitOk : kExitResource;
    }
  } catch (const CliError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  }
  return kExitOk;
}
