#include "oapt/rigidity.hpp"

#include <set>
#include <sstream>

#include "oapt/clique.hpp"
#include "oapt/error.hpp"

namespace oapt {

namespace {

constexpr const char* kScope =
    "forward direction (induced => pattern) checked exactly; the converse is only "
    "falsified on finite scaffolds";

std::string pair_text(const Subspace& a, const Subspace& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

std::vector<std::vector<std::size_t>> discover_apartments(int n, int k,
                                                          const std::vector<Subspace>& subs,
                                                          const HermitianForm& form) {
  Graph g(subs.size());
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = a + 1; b < subs.size(); ++b)
      if (compatible(subs[a], subs[b], form)) g.add_edge(a, b);
  const auto want = static_cast<std::size_t>(binom(n, k));
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : maximal_cliques(g)) {
    if (c.count() != want) continue;
    std::vector<std::size_t> members;
    for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) members.push_back(v);
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

Scaffold::Scaffold(int n, int k, std::vector<Subspace> subspaces, const std::vector<MapEntry>& map,
                   std::vector<std::vector<std::size_t>> apartments, bool check_apartments)
    : n_(n), k_(k), form_(static_cast<std::size_t>(n)), subspaces_(std::move(subspaces)),
      image_(subspaces_.size()) {
  if (n < 2 || k < 1 || k >= n) throw Error(ErrorCode::InvalidArgument, "scaffold needs 1 <= k < n");
  for (std::size_t i = 0; i < subspaces_.size(); ++i) {
    const auto& s = subspaces_[i];
    if (s.ambient() != static_cast<std::size_t>(n) || s.dim() != static_cast<std::size_t>(k)) {
      throw Error(ErrorCode::InvalidArgument,
                  "scaffold subspace " + std::to_string(i) + " is not k-dimensional in C^n");
    }
    if (!index_.emplace(s, i).second) {
      throw Error(ErrorCode::InvalidArgument, "scaffold lists subspace " + std::to_string(i) + " twice");
    }
  }
  for (const auto& [from, to] : map) {
    if (from >= subspaces_.size() || to >= subspaces_.size()) {
      throw Error(ErrorCode::InvalidArgument, "scaffold map index out of range");
    }
    if (image_[from]) throw Error(ErrorCode::InvalidArgument, "scaffold map lists a source twice");
    image_[from] = to;
  }
  if (n == 2 * k) {
    for (const auto& s : subspaces_) {
      if (!index_.count(orthocomplement(s, form_))) {
        throw Error(ErrorCode::InvalidArgument,
                    "scaffold with n = 2k must be closed under orthocomplement; missing perp of " +
                        s.to_string());
      }
    }
  }
  const auto want = static_cast<std::size_t>(binom(n, k));
  if (apartments.empty()) {
    apartments_ = discover_apartments(n, k, subspaces_, form_);
  } else {
    for (const auto& apt : apartments) {
      std::set<std::size_t> distinct(apt.begin(), apt.end());
      if (distinct.size() != want || apt.size() != want) {
        throw Error(ErrorCode::InvalidArgument, "declared apartment has the wrong cardinality");
      }
      for (auto i : apt)
        if (i >= subspaces_.size()) throw Error(ErrorCode::InvalidArgument, "apartment index out of range");
      if (!check_apartments) continue;
      for (std::size_t a = 0; a < apt.size(); ++a)
        for (std::size_t b = a + 1; b < apt.size(); ++b)
          if (!compatible(subspaces_[apt[a]], subspaces_[apt[b]], form_)) {
            throw Error(ErrorCode::InvalidArgument, "declared apartment has incompatible members");
          }
    }
    apartments_ = std::move(apartments);
  }
}

std::optional<std::size_t> Scaffold::index_of(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scaffold::MapEntry> Scaffold::map_entries() const {
  std::vector<MapEntry> out;
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i]) out.emplace_back(i, *image_[i]);
  return out;
}

bool Scaffold::injective() const {
  std::set<std::size_t> seen;
  for (const auto& img : image_)
    if (img && !seen.insert(*img).second) return false;
  return true;
}

std::size_t ScaffoldBuilder::add(const Subspace& s) {
  auto [it, inserted] = index_.emplace(s, subspaces_.size());
  if (inserted) subspaces_.push_back(s);
  return it->second;
}

std::vector<std::size_t> ScaffoldBuilder::add_apartment(const NumericApartment& a) {
  std::vector<std::size_t> idx;
  for (const auto& e : a.elements()) idx.push_back(add(e));
  apartments_.push_back(idx);
  return idx;
}

void ScaffoldBuilder::map(const Subspace& from, const Subspace& to) {
  map_[add(from)] = add(to);
}

void ScaffoldBuilder::fill_identity() {
  for (std::size_t i = 0; i < subspaces_.size(); ++i) map_.emplace(i, i);
}

Scaffold ScaffoldBuilder::build() const {
  std::vector<Scaffold::MapEntry> entries(map_.begin(), map_.end());
  return Scaffold(n_, k_, subspaces_, entries, apartments_, false);
}

std::vector<OrthoBase> default_bases(int n) {
  const auto std_base = OrthoBase::standard(static_cast<std::size_t>(n));
  return {std_base, inexact_witness(std_base, static_cast<std::size_t>(n) - 1,
                                    static_cast<std::size_t>(n))};
}

Scaffold scaffold_for_transform(const TransformSpec& t, const std::vector<OrthoBase>& bases, int k) {
  const int n = static_cast<int>(t.n());
  ScaffoldBuilder b(n, k);
  for (const auto& base : bases) {
    const NumericApartment a(base, k);
    b.add_apartment(a);
    for (const auto& x : a.elements()) b.map(x, induced_map(t, x));
  }
  // Images of an apartment form an apartment; listing it keeps the perp
  // closure and lets the table be checked against it.
  for (const auto& base : bases) b.add_apartment(NumericApartment(t.image_base(base), k));
  return b.build();
}

std::vector<NamedScaffold> adversarial_corpus(int n, int k) {
  const auto nn = static_cast<std::size_t>(n);
  const HermitianForm form(nn);
  const auto bases = default_bases(n);
  const NumericApartment standard(bases[0], k);
  std::vector<NamedScaffold> out;

  auto with_apartments = [&](ScaffoldBuilder& b) {
    for (const auto& base : bases) b.add_apartment(NumericApartment(base, k));
  };
  auto add_with_perp = [&](ScaffoldBuilder& b, const Subspace& s) {
    b.add(s);
    if (n == 2 * k) b.add(orthocomplement(s, form));
  };

  // span{e_1..e_k} <-> span{e_1..e_{k-1}, e_k + e_{k+1}}.
  {
    std::vector<Vector> rows = ExactMatrix::identity(nn).row_vectors();
    const Subspace x0 = standard.element(KSubset::from_indices(n, [&] {
      std::vector<int> v;
      for (int i = 1; i <= k; ++i) v.push_back(i);
      return v;
    }()));
    std::vector<Vector> y_rows(rows.begin(), rows.begin() + (k - 1));
    Vector bent = rows[static_cast<std::size_t>(k - 1)];
    bent[static_cast<std::size_t>(k)] = 1;
    y_rows.push_back(bent);
    const Subspace y0(nn, y_rows);
    ScaffoldBuilder b(n, k);
    with_apartments(b);
    add_with_perp(b, y0);
    b.map(x0, y0);
    b.map(y0, x0);
    b.fill_identity();
    out.push_back({"single-swap", b.build()});
  }

  // span{e_1..e_k} -> its orthocomplement, everything else fixed.
  if (n == 2 * k) {
    std::vector<int> first;
    for (int i = 1; i <= k; ++i) first.push_back(i);
    const Subspace x0 = standard.element(KSubset::from_indices(n, first));
    ScaffoldBuilder b(n, k);
    with_apartments(b);
    b.map(x0, orthocomplement(x0, form));
    b.fill_identity();
    out.push_back({"single-perp", b.build()});
  }

  // Spans over the non-orthogonal base e_1, e_1 + e_2, e_3, ..., e_n.
  {
    std::vector<Vector> mixed = ExactMatrix::identity(nn).row_vectors();
    mixed[1][0] = 1;
    ScaffoldBuilder b(n, k);
    with_apartments(b);
    for (auto s : all_ksubsets(n, k)) {
      std::vector<Vector> rows;
      for (int i : s.indices()) rows.push_back(mixed[static_cast<std::size_t>(i - 1)]);
      const Subspace target(nn, rows);
      const Subspace source = standard.element(s);
      if (target == source) continue;
      add_with_perp(b, target);
      b.map(source, target);
      b.map(target, source);
    }
    b.fill_identity();
    out.push_back({"base-mixing", b.build()});
  }
  return out;
}

NonInducedVerdict detect_noninduced(const Scaffold& s) {
  bool any_total = false;
  const auto& subs = s.subspaces();
  for (std::size_t a = 0; a < s.apartments().size(); ++a) {
    const auto& apt = s.apartments()[a];
    bool total = true;
    for (auto i : apt) total = total && s.image(i).has_value();
    if (!total) continue;
    any_total = true;
    std::map<std::size_t, std::size_t> source_of;
    for (auto i : apt) {
      const std::size_t img = *s.image(i);
      auto [it, fresh] = source_of.emplace(img, i);
      if (!fresh) {
        NonInducedVerdict v{false, "apartment image has fewer than binom(n,k) elements", a,
                            Scaffold::MapEntry{it->second, i}, Scaffold::MapEntry{img, img}, ""};
        v.witness = "f(" + subs[it->second].to_string() + ") = f(" + subs[i].to_string() +
                    ") = " + subs[img].to_string();
        return v;
      }
    }
    for (std::size_t p = 0; p < apt.size(); ++p) {
      for (std::size_t q = p + 1; q < apt.size(); ++q) {
        const std::size_t ip = *s.image(apt[p]);
        const std::size_t iq = *s.image(apt[q]);
        if (!compatible(subs[ip], subs[iq], s.form())) {
          NonInducedVerdict v{false, "apartment image contains an incompatible pair", a,
                              Scaffold::MapEntry{apt[p], apt[q]}, Scaffold::MapEntry{ip, iq}, ""};
          v.witness = pair_text(subs[ip], subs[iq]);
          return v;
        }
      }
    }
  }
  if (!any_total) {
    throw Error(ErrorCode::Precondition, "scaffold lacks a full apartment with a total image table");
  }
  return {true, "every listed apartment maps onto an apartment", std::nullopt, std::nullopt,
          std::nullopt, ""};
}

VerificationReport verify_apartment_preservation(const TransformSpec& t,
                                                 const std::vector<OrthoBase>& bases, int k) {
  VerificationReport rep;
  const int n = static_cast<int>(t.n());
  const HermitianForm form(t.n());
  for (std::size_t b = 0; b < bases.size(); ++b) {
    Stopwatch sw;
    const NumericApartment a(bases[b], k);
    std::set<Subspace> image;
    for (const auto& x : a.elements()) image.insert(induced_map(t, x));
    std::set<Subspace> expected;
    for (const auto& y : NumericApartment(t.image_base(bases[b]), k).elements())
      expected.insert(t.perp() ? orthocomplement(y, form) : y);
    CheckRecord r{"apartment-preservation", n, k, Status::Pass,
                  "Theorem 1 hypothesis (apartments to apartments)", std::nullopt, {}, 0};
    r.details["base"] = b;
    r.details["elements"] = image.size();
    r.details["scope"] = kScope;
    if (image != expected) {
      r.status = Status::Fail;
      for (const auto& y : image)
        if (!expected.count(y)) {
          r.witness = "image " + y.to_string() + " outside the apartment of T(B)";
          break;
        }
      if (!r.witness) r.witness = "image apartment has too few elements";
    }
    r.millis = sw.millis();
    rep.add(std::move(r));
  }
  return rep;
}

namespace {

void require_half(int n, int k) {
  if (n != 2 * k) throw Error(ErrorCode::Precondition, "pattern requires n = 2k");
}

}  // namespace

VerificationReport verify_dim_pattern(const TransformSpec& t, const Scaffold& s) {
  const int n = s.n(), k = s.k();
  require_half(n, k);
  if (t.n() != static_cast<std::size_t>(n)) throw Error(ErrorCode::DimensionMismatch, "transform size mismatch");
  const auto& subs = s.subspaces();
  std::vector<Subspace> img;
  for (const auto& x : subs) img.push_back(induced_map(t, x));

  VerificationReport rep;
  {
    Stopwatch sw;
    CheckRecord r{"dim-pattern", n, k, Status::Pass, "Lemma 2-1 (dim f(X)nf(Y) in {m, k-m})",
                  std::nullopt, {}, 0};
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < subs.size() && !r.witness; ++a) {
      for (std::size_t b = a + 1; b < subs.size(); ++b) {
        const auto m = intersection_dim(subs[a], subs[b]);
        const auto d = intersection_dim(img[a], img[b]);
        ++pairs;
        // A transform applies perp to all arguments or none, so m is exact.
        if (d != m) {
          r.status = Status::Fail;
          r.witness = pair_text(subs[a], subs[b]) + ": m=" + std::to_string(m) +
                      ", image dim=" + std::to_string(d);
          break;
        }
      }
    }
    r.details["pairs"] = pairs;
    r.details["uniform"] = true;
    r.millis = sw.millis();
    rep.add(std::move(r));
  }
  {
    Stopwatch sw;
    CheckRecord r{"perp-equivariance", n, k, Status::Pass, "Lemma 2-2 (f(X^perp) = f(X)^perp)",
                  std::nullopt, {}, 0};
    for (std::size_t a = 0; a < subs.size(); ++a) {
      const Subspace xp = orthocomplement(subs[a], s.form());
      if (!(induced_map(t, xp) == orthocomplement(img[a], s.form()))) {
        r.status = Status::Fail;
        r.witness = "X = " + subs[a].to_string();
        break;
      }
    }
    r.details["members"] = subs.size();
    r.millis = sw.millis();
    rep.add(std::move(r));
  }
  return rep;
}

VerificationReport verify_dim_pattern(const Scaffold& s) {
  const int n = s.n(), k = s.k();
  require_half(n, k);
  const auto& subs = s.subspaces();
  VerificationReport rep;
  {
    Stopwatch sw;
    CheckRecord r{"dim-pattern", n, k, Status::Pass, "Lemma 2-1 (dim f(X)nf(Y) in {m, k-m})",
                  std::nullopt, {}, 0};
    std::set<std::pair<std::size_t, std::size_t>> done;
    bool exact = true;
    for (const auto& apt : s.apartments()) {
      for (std::size_t p = 0; p < apt.size() && !r.witness; ++p) {
        for (std::size_t q = p + 1; q < apt.size(); ++q) {
          const auto a = std::min(apt[p], apt[q]), b = std::max(apt[p], apt[q]);
          if (!s.image(a) || !s.image(b) || !done.insert({a, b}).second) continue;
          const auto m = intersection_dim(subs[a], subs[b]);
          const auto d = intersection_dim(subs[*s.image(a)], subs[*s.image(b)]);
          exact = exact && d == m;
          if (d != m && d != static_cast<std::size_t>(k) - m) {
            r.status = Status::Fail;
            r.witness = pair_text(subs[a], subs[b]) + ": m=" + std::to_string(m) +
                        ", image dim=" + std::to_string(d);
            break;
          }
        }
      }
    }
    r.details["pairs"] = done.size();
    r.details["uniform"] = exact;
    r.millis = sw.millis();
    rep.add(std::move(r));
  }
  {
    Stopwatch sw;
    CheckRecord r{"perp-equivariance", n, k, Status::Pass, "Lemma 2-2 (f(X^perp) = f(X)^perp)",
                  std::nullopt, {}, 0};
    std::size_t checked = 0;
    for (std::size_t a = 0; a < subs.size(); ++a) {
      const auto ip = s.index_of(orthocomplement(subs[a], s.form()));
      if (!ip || !s.image(a) || !s.image(*ip)) continue;
      ++checked;
      if (!(subs[*s.image(*ip)] == orthocomplement(subs[*s.image(a)], s.form()))) {
        r.status = Status::Fail;
        r.witness = "X = " + subs[a].to_string();
        break;
      }
    }
    r.details["members"] = checked;
    r.millis = sw.millis();
    rep.add(std::move(r));
  }
  return rep;
}

CheckRecord verify_star_pattern(const TransformSpec& t, const OrthoBase& base, int k) {
  const int n = static_cast<int>(t.n());
  if (n == 2 * k) throw Error(ErrorCode::Precondition, "star pattern requires n != 2k");
  Stopwatch sw;
  CheckRecord r{"star-to-star", n, k, Status::Pass,
                "Lemma 1-2 (stars of A go to stars of f(A))", std::nullopt, {}, 0};
  const NumericApartment a(base, k);
  const std::set<Subspace> target = NumericApartment(t.image_base(base), k).element_set();
  auto images_of = [&](const std::vector<KSubset>& members) {
    std::vector<Subspace> out;
    for (auto x : members) out.push_back(induced_map(t, a.element(x)));
    return out;
  };
  std::size_t stars = 0, tops = 0;
  for (auto s : all_ksubsets(n, k - 1)) {
    const auto imgs = images_of(star(n, k, s));
    Subspace common = imgs.front();
    for (const auto& y : imgs) common = intersect(common, y);
    bool ok = common.dim() == static_cast<std::size_t>(k - 1);
    for (const auto& y : imgs) ok = ok && target.count(y);
    ++stars;
    if (!ok) {
      r.status = Status::Fail;
      r.witness = "star of " + s.to_string() + " maps to a set with common part " + common.to_string();
      break;
    }
  }
  if (r.status == Status::Pass && k + 1 < n) {
    for (auto top_set : all_ksubsets(n, k + 1)) {
      const auto imgs = images_of(top(n, k, top_set));
      Subspace hull(static_cast<std::size_t>(n));
      for (const auto& y : imgs) hull = sum(hull, y);
      ++tops;
      if (hull.dim() != static_cast<std::size_t>(k + 1)) {
        r.status = Status::Fail;
        r.witness = "top of " + top_set.to_string() + " maps into a span of dimension " +
                    std::to_string(hull.dim());
        break;
      }
    }
  }
  r.details["stars"] = stars;
  r.details["tops"] = tops;
  r.details["scope"] = kScope;
  r.millis = sw.millis();
  return r;
}

CheckRecord verify_pair_clique_pattern(const TransformSpec& t, const OrthoBase& base, int k) {
  const int n = static_cast<int>(t.n());
  require_half(n, k);
  Stopwatch sw;
  CheckRecord r{"pair-clique", n, k, Status::Pass,
                "Lemma 2-6 (g sends orthogonal apartments to orthogonal apartments)", std::nullopt,
                {}, 0};
  const HermitianForm form(t.n());
  const NumericApartment a(base, k);
  std::set<Subspace> g_image;
  for (auto s : all_ksubsets(n, k - 1)) {
    // The pair vertices {f(X), f(X)^perp} for X in the star of S.
    std::vector<std::pair<Subspace, Subspace>> pairs;
    for (auto x : star(n, k, s)) {
      Subspace y = induced_map(t, a.element(x));
      Subspace yp = orthocomplement(y, form);
      pairs.emplace_back(std::move(y), std::move(yp));
    }
    // g(S) is the (k-1)-subspace lying in one member of every pair.
    std::vector<Subspace> candidates;
    for (const auto* p : {&pairs[0].first, &pairs[0].second})
      for (const auto* q : {&pairs[1].first, &pairs[1].second}) {
        Subspace c = intersect(*p, *q);
        if (c.dim() == static_cast<std::size_t>(k - 1)) candidates.push_back(std::move(c));
      }
    std::vector<Subspace> fits;
    for (const auto& c : candidates) {
      bool ok = true;
      for (const auto& [y, yp] : pairs) ok = ok && (y.contains(c) || yp.contains(c));
      if (ok && std::find(fits.begin(), fits.end(), c) == fits.end()) fits.push_back(c);
    }
    if (fits.size() != 1) {
      r.status = Status::Fail;
      r.witness = "image of C(" + s.to_string() + ") is not a clique C(S') for a unique S' (" +
                  std::to_string(fits.size()) + " candidates)";
      break;
    }
    g_image.insert(fits.front());
  }
  if (r.status == Status::Pass) {
    const auto expected = NumericApartment(t.image_base(base), k - 1).element_set();
    if (g_image != expected) {
      r.status = Status::Fail;
      r.witness = "g(A_{k-1}(B)) differs from the (k-1)-apartment of T(B)";
    }
  }
  r.details["cliques"] = binom(n, k - 1);
  r.details["scope"] = kScope;
  r.millis = sw.millis();
  return r;
}

std::vector<Subspace> k1_probe_lines(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "k = 1 recovery needs n >= 2");
  const auto id = ExactMatrix::identity(n).row_vectors();
  std::vector<Subspace> lines;
  for (const auto& v : id) lines.push_back(Subspace(n, {v}));
  for (std::size_t j = 1; j < n; ++j) {
    Vector v = id[0];
    v[j] = 1;
    lines.push_back(Subspace(n, {v}));
  }
  Vector w = id[0];
  w[1] = GaussianRational::i();
  lines.push_back(Subspace(n, {w}));
  return lines;
}

std::vector<LineSample> k1_samples(const TransformSpec& t) {
  std::vector<LineSample> out;
  for (auto& l : k1_probe_lines(t.n())) {
    Subspace img = induced_map(t, l);
    out.emplace_back(std::move(l), std::move(img));
  }
  return out;
}

TransformSpec recover_operator_k1(const std::vector<LineSample>& samples, std::size_t n) {
  std::map<Subspace, Subspace> table;
  for (const auto& [line, img] : samples) {
    if (line.ambient() != n || img.ambient() != n || line.dim() != 1 || img.dim() != 1) {
      throw Error(ErrorCode::InvalidArgument, "samples must be lines of C^n");
    }
    auto [it, fresh] = table.emplace(line, img);
    if (!fresh && !(it->second == img)) {
      throw Error(ErrorCode::Inconsistent, "line " + line.to_string() + " has two images");
    }
  }
  const auto probes = k1_probe_lines(n);
  auto image_vector = [&](const Subspace& line) {
    auto it = table.find(line);
    if (it == table.end()) {
      throw Error(ErrorCode::Precondition, "insufficient samples: missing " + line.to_string());
    }
    return it->second.frame().row(0);
  };

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(image_vector(probes[i]));
  // image(e_1 + e_j) ~ r_1 + mu_j r_j fixes the relative scale of row j.
  for (std::size_t j = 1; j < n; ++j) {
    const Vector w = image_vector(probes[n + j - 1]);
    ExactMatrix cols(n, 3);
    for (std::size_t c = 0; c < n; ++c) {
      cols(c, 0) = rows[0][c];
      cols(c, 1) = rows[j][c];
      cols(c, 2) = w[c];
    }
    const auto ker = kernel(cols);
    if (ker.size() != 1 || ker[0][0].is_zero() || ker[0][1].is_zero() || ker[0][2].is_zero()) {
      throw Error(ErrorCode::Inconsistent,
                  "image of " + probes[n + j - 1].to_string() + " is not a generic point of the "
                  "line through the images of e_1 and e_" + std::to_string(j + 1));
    }
    const GaussianRational mu = ker[0][1] / ker[0][0];
    for (auto& z : rows[j]) z *= mu;
  }

  const Vector w = image_vector(probes.back());
  Vector plain(n), conj(n);
  for (std::size_t c = 0; c < n; ++c) {
    plain[c] = rows[0][c] + GaussianRational::i() * rows[1][c];
    conj[c] = rows[0][c] - GaussianRational::i() * rows[1][c];
  }
  const Subspace wl(n, {w});
  bool conjugate;
  if (wl == Subspace(n, {plain})) {
    conjugate = false;
  } else if (wl == Subspace(n, {conj})) {
    conjugate = true;
  } else {
    throw Error(ErrorCode::Inconsistent, "image of span(e_1 + i e_2) fits neither a linear nor "
                                         "a conjugate-linear operator");
  }

  const ExactMatrix m = ExactMatrix::from_rows(rows, n);
  if (!scaled_unitary_factor(m)) {
    throw Error(ErrorCode::Inconsistent, "the semilinear operator fitting the samples is not "
                                         "a scalar multiple of a unitary");
  }
  TransformSpec t(m, conjugate, false);
  for (const auto& [line, img] : samples) {
    if (!(induced_map(t, line) == img)) {
      throw Error(ErrorCode::Inconsistent, "sample " + line.to_string() + " is not reproduced");
    }
  }
  return t;
}

}  // namespace oapt
