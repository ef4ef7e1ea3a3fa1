#include "sosq/sosq.h"

#include "sosq/constructions.hpp"
#include "sosq/document.hpp"
#include "sosq/generators.hpp"
#include "sosq/hurwitz.hpp"
#include "sosq/oracle.hpp"
#include "sosq/search.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct sosq_system_s {
  sosq::SystemDocument doc;
};

namespace {

thread_local std::string last_error;

sosq_status fail(sosq_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs f and translates library exceptions into status codes.
template <class F> sosq_status guarded(F &&f) {
  try {
    last_error.clear();
    return f();
  } catch (const sosq::SearchBudgetExceeded &e) {
    return fail(SOSQ_ERR_RESOURCE, e.what());
  } catch (const sosq::DomainError &e) {
    return fail(SOSQ_ERR_DOMAIN, e.what());
  } catch (const sosq::DimensionError &e) {
    return fail(SOSQ_ERR_DIMENSION, e.what());
  } catch (const sosq::ArithmeticError &e) {
    return fail(SOSQ_ERR_ARITHMETIC, e.what());
  } catch (const sosq::StructuralError &e) {
    return fail(SOSQ_ERR_STRUCTURAL, e.what());
  } catch (const sosq::ResourceError &e) {
    return fail(SOSQ_ERR_RESOURCE, e.what());
  } catch (const sosq::SchemaError &e) {
    return fail(SOSQ_ERR_SCHEMA, e.what());
  } catch (const std::bad_alloc &) {
    return fail(SOSQ_ERR_RESOURCE, "out of memory");
  } catch (const std::exception &e) {
    return fail(SOSQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SOSQ_ERR_INTERNAL, "unknown error");
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::size_t cap(std::size_t max_rows) {
  return max_rows == 0 ? sosq::kDefaultMaxRows : max_rows;
}

sosq::Provenance trace_of(const sosq_system_s &sys) {
  if (sys.doc.provenance)
    return *sys.doc.provenance;
  const sosq::FormulaSize sz = sys.doc.system.size();
  return {"external",
          {{"r", static_cast<std::int64_t>(sz.r)},
           {"s", static_cast<std::int64_t>(sz.s)},
           {"n", static_cast<std::int64_t>(sz.n)}},
          {}};
}

sosq_system wrap(sosq::HurwitzSystem sys,
                 std::optional<sosq::Provenance> provenance) {
  return new sosq_system_s{sosq::SystemDocument{
      std::string(sosq::kSchemaVersion), std::move(sys),
      std::move(provenance)}};
}

#define SOSQ_REQUIRE(ptr)                                                      \
  do {                                                                         \
    if (!(ptr))                                                                \
      return fail(SOSQ_ERR_INVALID_ARGUMENT, #ptr " must not be null");        \
  } while (0)

} // namespace

extern "C" {

const char *sosq_status_name(sosq_status status) {
  switch (status) {
  case SOSQ_OK: return "ok";
  case SOSQ_VERIFY_FAILED: return "verification failed";
  case SOSQ_ERR_INVALID_ARGUMENT: return "invalid argument";
  case SOSQ_ERR_DOMAIN: return "domain error";
  case SOSQ_ERR_DIMENSION: return "dimension error";
  case SOSQ_ERR_ARITHMETIC: return "arithmetic error";
  case SOSQ_ERR_STRUCTURAL: return "structural error";
  case SOSQ_ERR_RESOURCE: return "resource limit";
  case SOSQ_ERR_SCHEMA: return "schema error";
  case SOSQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char *sosq_last_error(void) { return last_error.c_str(); }

const char *sosq_schema_version(void) { return sosq::kSchemaVersion.data(); }

size_t sosq_default_max_rows(void) { return sosq::kDefaultMaxRows; }

void sosq_string_free(char *str) { std::free(str); }

void sosq_system_free(sosq_system sys) { delete sys; }

sosq_status sosq_rho(uint64_t n, uint64_t *out) {
  SOSQ_REQUIRE(out);
  return guarded([&] {
    *out = sosq::rho(n);
    return SOSQ_OK;
  });
}

sosq_status sosq_system_create(size_t r, size_t s, size_t n,
                               const int64_t *entries, sosq_system *out) {
  SOSQ_REQUIRE(entries);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    if (r == 0 || s == 0 || n == 0)
      throw sosq::StructuralError("formula size must be positive");
    std::vector<sosq::IntMatrix> matrices;
    matrices.reserve(r);
    for (size_t i = 0; i < r; ++i) {
      const int64_t *begin = entries + i * n * s;
      matrices.emplace_back(n, s, std::vector<sosq::Entry>(begin, begin + n * s));
    }
    *out = wrap(sosq::HurwitzSystem({r, s, n}, std::move(matrices)),
                std::nullopt);
    return SOSQ_OK;
  });
}

sosq_status sosq_system_size(sosq_system sys, size_t *r, size_t *s,
                             size_t *n) {
  SOSQ_REQUIRE(sys);
  const sosq::FormulaSize sz = sys->doc.system.size();
  if (r) *r = sz.r;
  if (s) *s = sz.s;
  if (n) *n = sz.n;
  return SOSQ_OK;
}

sosq_status sosq_system_entries(sosq_system sys, int64_t *buffer,
                                size_t length) {
  SOSQ_REQUIRE(sys);
  SOSQ_REQUIRE(buffer);
  const sosq::HurwitzSystem &h = sys->doc.system;
  const size_t per = h.n() * h.s();
  if (length < h.r() * per)
    return fail(SOSQ_ERR_DIMENSION, "buffer holds " + std::to_string(length) +
                                        " entries, need " +
                                        std::to_string(h.r() * per));
  for (size_t i = 0; i < h.r(); ++i) {
    auto e = h[i].entries();
    std::copy(e.begin(), e.end(), buffer + i * per);
  }
  return SOSQ_OK;
}

sosq_status sosq_gen_classical(unsigned dim, sosq_system *out) {
  SOSQ_REQUIRE(out);
  return guarded([&] {
    *out = wrap(sosq::classical(dim),
                sosq::Provenance{"classical", {{"dim", dim}}, {}});
    return SOSQ_OK;
  });
}

sosq_status sosq_gen_hr_family(unsigned m, size_t max_rows, sosq_system *out) {
  SOSQ_REQUIRE(out);
  return guarded([&] {
    *out = wrap(sosq::hr_family(m, cap(max_rows)),
                sosq::Provenance{"hr_family", {{"m", m}}, {}});
    return SOSQ_OK;
  });
}

sosq_status sosq_double(sosq_system sys, size_t special, size_t max_rows,
                        sosq_system *out) {
  SOSQ_REQUIRE(sys);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    sosq::HurwitzSystem result =
        sosq::doubling(sys->doc.system, special, cap(max_rows));
    *out = wrap(std::move(result),
                sosq::Provenance{"double",
                                 {{"special", static_cast<int64_t>(special)}},
                                 {trace_of(*sys)}});
    return SOSQ_OK;
  });
}

sosq_status sosq_combine(sosq_system a, sosq_system b, size_t max_rows,
                         sosq_system *out) {
  SOSQ_REQUIRE(a);
  SOSQ_REQUIRE(b);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    sosq::HurwitzSystem result =
        sosq::combine(a->doc.system, b->doc.system, cap(max_rows));
    *out = wrap(std::move(result),
                sosq::Provenance{"combine", {}, {trace_of(*a), trace_of(*b)}});
    return SOSQ_OK;
  });
}

sosq_status sosq_extend(sosq_system sys, unsigned k, size_t max_rows,
                        sosq_system *out) {
  SOSQ_REQUIRE(sys);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    sosq::HurwitzSystem result =
        sosq::extended_doubling(sys->doc.system, k, cap(max_rows));
    *out = wrap(std::move(result),
                sosq::Provenance{"extended_double", {{"k", k}},
                                 {trace_of(*sys)}});
    return SOSQ_OK;
  });
}

sosq_status sosq_verify(sosq_system sys, int with_oracle, char **report) {
  SOSQ_REQUIRE(sys);
  return guarded([&] {
    const sosq::VerifyReport eq = sosq::verify_hurwitz(sys->doc.system);
    std::string text = "hurwitz equations: " + eq.describe();
    bool ok = eq.passed();
    if (with_oracle) {
      const sosq::IdentityReport id =
          sosq::check_identity(sosq::system_to_formula(sys->doc.system));
      text += "\npolynomial identity: " + id.describe();
      ok = ok && id.passed();
    }
    if (report)
      *report = dup_string(text);
    return ok ? SOSQ_OK : SOSQ_VERIFY_FAILED;
  });
}

sosq_status sosq_verify_amicable(sosq_system first, sosq_system second,
                                 char **report) {
  SOSQ_REQUIRE(first);
  return guarded([&] {
    std::optional<sosq::HurwitzSystem> other;
    if (second)
      other = second->doc.system;
    const sosq::VerifyReport r = sosq::verify_amicable(
        sosq::AmicablePair(first->doc.system, std::move(other)));
    if (report)
      *report = dup_string("amicable pair: " + r.describe());
    return r.passed() ? SOSQ_OK : SOSQ_VERIFY_FAILED;
  });
}

sosq_status sosq_render(sosq_system sys, sosq_format format, char **out) {
  SOSQ_REQUIRE(sys);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    if (format != SOSQ_FORMAT_TEXT && format != SOSQ_FORMAT_LATEX)
      throw sosq::DomainError("unknown render format");
    *out = dup_string(sosq::render(sosq::system_to_formula(sys->doc.system),
                                   format == SOSQ_FORMAT_LATEX
                                       ? sosq::RenderFormat::Latex
                                       : sosq::RenderFormat::Text));
    return SOSQ_OK;
  });
}

sosq_status sosq_document_write(sosq_system sys, char **out) {
  SOSQ_REQUIRE(sys);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(sosq::serialize(sys->doc));
    return SOSQ_OK;
  });
}

sosq_status sosq_document_read(const char *text, size_t length,
                               sosq_system *out) {
  SOSQ_REQUIRE(text);
  SOSQ_REQUIRE(out);
  return guarded([&] {
    *out = new sosq_system_s{
        sosq::parse_document(std::string_view(text, length))};
    return SOSQ_OK;
  });
}

sosq_status sosq_search(size_t s, size_t n, uint64_t node_budget,
                        sosq_search_result *result, sosq_system *witness) {
  SOSQ_REQUIRE(result);
  SOSQ_REQUIRE(witness);
  *witness = nullptr;
  sosq::SearchOptions options;
  if (node_budget)
    options.node_budget = node_budget;

  auto publish = [&](const sosq::SearchResult &r) {
    result->r_max = r.r_max;
    result->exhaustive = r.exhaustive ? 1 : 0;
    result->nodes = r.nodes;
    result->graph_vertices = r.graph_vertices;
    if (r.witness)
      *witness = wrap(*r.witness,
                      sosq::Provenance{"search",
                                       {{"s", static_cast<int64_t>(s)},
                                        {"n", static_cast<int64_t>(n)}},
                                       {}});
  };
  return guarded([&] {
    try {
      publish(sosq::max_r(s, n, options));
      return SOSQ_OK;
    } catch (const sosq::SearchBudgetExceeded &e) {
      publish(e.partial());
      throw;
    }
  });
}

} // extern "C"
