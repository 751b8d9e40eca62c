#include "oapt/oapt.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "oapt/error.hpp"
#include "oapt/scaffold_io.hpp"
#include "oapt/suites.hpp"

struct oapt_config {
  oapt::RunConfig config;
};
struct oapt_report {
  oapt::VerificationReport report;
};
struct oapt_subspace {
  oapt::Subspace subspace;
};
struct oapt_transform {
  oapt::TransformSpec transform;
};
struct oapt_scaffold {
  oapt::Scaffold scaffold;
};

namespace {

thread_local std::string last_error;

oapt_status status_of(oapt::ErrorCode code) {
  switch (code) {
    case oapt::ErrorCode::InvalidArgument: return OAPT_INVALID_ARGUMENT;
    case oapt::ErrorCode::DimensionMismatch: return OAPT_DIMENSION_MISMATCH;
    case oapt::ErrorCode::Precondition: return OAPT_PRECONDITION;
    case oapt::ErrorCode::Exceptional: return OAPT_EXCEPTIONAL;
    case oapt::ErrorCode::Inconsistent: return OAPT_INCONSISTENT;
    case oapt::ErrorCode::Parse: return OAPT_PARSE;
  }
  return OAPT_INTERNAL;
}

oapt_status fail(oapt_status s, std::string what) {
  last_error = std::move(what);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
oapt_status guard(F&& f) {
  try {
    f();
    return OAPT_OK;
  } catch (const oapt::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OAPT_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(OAPT_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OAPT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OAPT_INTERNAL, e.what());
  } catch (...) {
    return fail(OAPT_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw oapt::Error(oapt::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<oapt::Vector> read_rows(std::size_t n, std::size_t rows, const int64_t* quads) {
  require(n > 0, "n must be positive");
  require(rows == 0 || quads, "null entries");
  std::vector<oapt::Vector> out(rows, oapt::Vector(n));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const int64_t* q = quads + 4 * (r * n + c);
      out[r][c] = oapt::GaussianRational::from_parts(q[0], q[1], q[2], q[3]);
    }
  return out;
}

oapt::KSubset subset(int n, uint64_t bits) { return oapt::KSubset(n, bits); }

}  // namespace

extern "C" {

const char* oapt_last_error(void) { return last_error.c_str(); }

const char* oapt_status_name(oapt_status s) {
  switch (s) {
    case OAPT_OK: return "OK";
    case OAPT_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case OAPT_DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case OAPT_PRECONDITION: return "PRECONDITION";
    case OAPT_EXCEPTIONAL: return "EXCEPTIONAL";
    case OAPT_INCONSISTENT: return "INCONSISTENT";
    case OAPT_PARSE: return "PARSE";
    case OAPT_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

void oapt_string_free(char* s) { std::free(s); }

oapt_status oapt_c_value(int n, int k, int m, int64_t* out) {
  return guard([&] {
    require(out, "null output");
    require(n > 0 && k >= 0 && k <= n && m >= 0 && m <= k, "need 0 <= m <= k <= n");
    *out = oapt::c_formula(n, k, m);
  });
}

oapt_status oapt_count_complementary(int n, int k, uint64_t x, uint64_t y, int64_t* out) {
  return guard([&] {
    require(out, "null output");
    const auto a = subset(n, x), b = subset(n, y);
    require(a.size() == k && b.size() == k, "subsets must have k elements");
    *out = oapt::count_complementary_containing(n, k, a, b);
  });
}

oapt_status oapt_case_tag(int n, int k, const char** out) {
  return guard([&] {
    require(out, "null output");
    *out = oapt::to_string(oapt::case_tag(n, k)).data();
  });
}

oapt_status oapt_classify_pair(int n, int k, uint64_t x, uint64_t y, int* candidates,
                               size_t capacity, size_t* count) {
  return guard([&] {
    require(count, "null output");
    require(capacity == 0 || candidates, "null candidate buffer");
    const auto a = subset(n, x), b = subset(n, y);
    require(a.size() == k && b.size() == k, "subsets must have k elements");
    const auto dc = oapt::classify_pair(n, k, a, b);
    for (std::size_t i = 0; i < dc.candidates.size() && i < capacity; ++i)
      candidates[i] = dc.candidates[i];
    *count = dc.candidates.size();
  });
}

oapt_status oapt_subspace_new(size_t n, size_t rows, const int64_t* quads, oapt_subspace** out) {
  return guard([&] {
    require(out, "null output");
    const auto vs = read_rows(n, rows, quads);
    *out = new oapt_subspace{oapt::Subspace(n, vs)};
  });
}

void oapt_subspace_free(oapt_subspace* s) { delete s; }

oapt_status oapt_subspace_dim(const oapt_subspace* s, size_t* out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = s->subspace.dim();
  });
}

oapt_status oapt_subspace_to_string(const oapt_subspace* s, char** out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = dup(s->subspace.to_string());
  });
}

oapt_status oapt_subspace_equal(const oapt_subspace* a, const oapt_subspace* b, int* out) {
  return guard([&] {
    require(a && b && out, "null argument");
    *out = a->subspace == b->subspace;
  });
}

oapt_status oapt_subspace_intersect(const oapt_subspace* a, const oapt_subspace* b,
                                    oapt_subspace** out) {
  return guard([&] {
    require(a && b && out, "null argument");
    *out = new oapt_subspace{oapt::intersect(a->subspace, b->subspace)};
  });
}

oapt_status oapt_subspace_orthocomplement(const oapt_subspace* a, oapt_subspace** out) {
  return guard([&] {
    require(a && out, "null argument");
    const oapt::HermitianForm form(a->subspace.ambient());
    *out = new oapt_subspace{oapt::orthocomplement(a->subspace, form)};
  });
}

oapt_status oapt_compatible(const oapt_subspace* a, const oapt_subspace* b, int* out) {
  return guard([&] {
    require(a && b && out, "null argument");
    const oapt::HermitianForm form(a->subspace.ambient());
    *out = oapt::compatible(a->subspace, b->subspace, form);
  });
}

oapt_status oapt_transform_new(size_t n, const int64_t* quads, int conjugate, int perp,
                               oapt_transform** out) {
  return guard([&] {
    require(out, "null output");
    const auto rows = read_rows(n, n, quads);
    *out = new oapt_transform{
        oapt::TransformSpec(oapt::ExactMatrix::from_rows(rows, n), conjugate != 0, perp != 0)};
  });
}

void oapt_transform_free(oapt_transform* t) { delete t; }

oapt_status oapt_transform_apply(const oapt_transform* t, const oapt_subspace* x,
                                 oapt_subspace** out) {
  return guard([&] {
    require(t && x && out, "null argument");
    *out = new oapt_subspace{oapt::induced_map(t->transform, x->subspace)};
  });
}

oapt_status oapt_transform_to_string(const oapt_transform* t, char** out) {
  return guard([&] {
    require(t && out, "null argument");
    const auto& tr = t->transform;
    std::string s = "M = " + tr.matrix().to_string() + "\nconjugate = " +
                    (tr.conjugate() ? "true" : "false") + ", perp = " +
                    (tr.perp() ? "true" : "false") + ", M*M = " + tr.scale().get_str() + " I";
    *out = dup(s);
  });
}

oapt_status oapt_transform_recover_k1(const oapt_transform* t, oapt_transform** out) {
  return guard([&] {
    require(t && out, "null argument");
    const auto samples = oapt::k1_samples(t->transform);
    *out = new oapt_transform{oapt::recover_operator_k1(samples, t->transform.n())};
  });
}

oapt_status oapt_scaffold_parse(const char* json, oapt_scaffold** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new oapt_scaffold{oapt::parse_scaffold_json(json)};
  });
}

oapt_status oapt_scaffold_example(int n, int k, const char* kind, oapt_scaffold** out) {
  return guard([&] {
    require(kind && out, "null argument");
    require(n >= 2 && n <= oapt::kMaxN && k >= 1 && k < n, "need 1 <= k < n");
    const std::string name(kind);
    if (name == "identity") {
      const auto t = oapt::TransformSpec::identity(static_cast<std::size_t>(n));
      *out = new oapt_scaffold{oapt::scaffold_for_transform(t, oapt::default_bases(n), k)};
      return;
    }
    for (auto& entry : oapt::adversarial_corpus(n, k))
      if (entry.name == name) {
        *out = new oapt_scaffold{std::move(entry.scaffold)};
        return;
      }
    throw oapt::Error(oapt::ErrorCode::InvalidArgument,
                      "no scaffold '" + name + "' at (n, k) = (" + std::to_string(n) + ", " +
                          std::to_string(k) + ")");
  });
}

void oapt_scaffold_free(oapt_scaffold* s) { delete s; }

oapt_status oapt_scaffold_to_json(const oapt_scaffold* s, char** out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = dup(oapt::scaffold_to_json(s->scaffold));
  });
}

oapt_status oapt_scaffold_detect(const oapt_scaffold* s, int* consistent, char** witness) {
  return guard([&] {
    require(s && consistent, "null argument");
    const auto v = oapt::detect_noninduced(s->scaffold);
    if (witness) *witness = dup(v.induced_consistent ? std::string() : v.witness);
    *consistent = v.induced_consistent;
  });
}

oapt_status oapt_scaffold_verify(const oapt_scaffold* s, oapt_report** out) {
  return guard([&] {
    require(s && out, "null argument");
    *out = new oapt_report{oapt::verify_scaffold(s->scaffold)};
  });
}

oapt_status oapt_config_new(oapt_config** out) {
  return guard([&] {
    require(out, "null output");
    *out = new oapt_config{};
  });
}

void oapt_config_free(oapt_config* c) { delete c; }

oapt_status oapt_config_set_n_range(oapt_config* c, int n_min, int n_max) {
  return guard([&] {
    require(c, "null config");
    require(n_min >= 1 && n_min <= n_max && n_max <= oapt::kMaxN, "need 1 <= n_min <= n_max <= 64");
    c->config.n_min = n_min;
    c->config.n_max = n_max;
  });
}

oapt_status oapt_config_add_k(oapt_config* c, int k) {
  return guard([&] {
    require(c, "null config");
    require(k >= 1 && k < oapt::kMaxN, "k out of range");
    c->config.ks.push_back(k);
  });
}

oapt_status oapt_config_add_suite(oapt_config* c, const char* suite) {
  return guard([&] {
    require(c && suite, "null argument");
    const auto& names = oapt::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw oapt::Error(oapt::ErrorCode::InvalidArgument, std::string("unknown suite '") + suite + "'");
    c->config.suites.emplace_back(suite);
  });
}

oapt_status oapt_config_set_seed(oapt_config* c, uint64_t seed) {
  return guard([&] {
    require(c, "null config");
    c->config.seed = seed;
  });
}

oapt_status oapt_config_set_threads(oapt_config* c, unsigned threads) {
  return guard([&] {
    require(c, "null config");
    c->config.threads = threads;
  });
}

oapt_status oapt_config_echo(const oapt_config* c, char** out) {
  return guard([&] {
    require(c && out, "null argument");
    *out = dup(oapt::config_echo(c->config).dump());
  });
}

const char* oapt_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : oapt::suite_names()) s += (s.empty() ? "" : " ") + n;
    return s;
  }();
  return names.c_str();
}

const char* oapt_scope_banner(void) {
  static const std::string banner = oapt::scope_banner();
  return banner.c_str();
}

oapt_status oapt_verify(const oapt_config* c, oapt_report** out) {
  return guard([&] {
    require(c && out, "null argument");
    *out = new oapt_report{oapt::run_verify(c->config)};
  });
}

void oapt_report_free(oapt_report* r) { delete r; }

oapt_status oapt_report_counts(const oapt_report* r, size_t* passed, size_t* failed,
                               size_t* skipped) {
  return guard([&] {
    require(r, "null report");
    if (passed) *passed = r->report.count(oapt::Status::Pass);
    if (failed) *failed = r->report.count(oapt::Status::Fail);
    if (skipped) *skipped = r->report.count(oapt::Status::Skipped);
  });
}

oapt_status oapt_report_render(const oapt_report* r, oapt_format format, int timing, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    require(format == OAPT_FORMAT_JSON || format == OAPT_FORMAT_CSV, "unknown format");
    *out = dup(format == OAPT_FORMAT_JSON ? oapt::render_json(r->report, timing != 0)
                                          : oapt::render_csv(r->report, timing != 0));
  });
}

oapt_status oapt_scan_csv(int n_min, int n_max, const int* ks, size_t nk, char** out) {
  return guard([&] {
    require(out, "null output");
    require(nk == 0 || ks, "null k list");
    *out = dup(oapt::scan_csv(n_min, n_max, std::vector<int>(ks, ks + nk)));
  });
}

oapt_status oapt_witness_inexact(int n, int k, int i, int j, char** text, int* ok) {
  return guard([&] {
    require(text && ok, "null argument");
    const auto w = oapt::witness_inexact(n, k, i, j);
    *text = dup(w.text);
    *ok = w.ok;
  });
}

oapt_status oapt_witness_compatible_triple(int n, int k, int count, char** text, int* ok) {
  return guard([&] {
    require(text && ok, "null argument");
    const auto w = oapt::witness_compatible_triple(n, k, count);
    *text = dup(w.text);
    *ok = w.ok;
  });
}

}  // extern "C"
