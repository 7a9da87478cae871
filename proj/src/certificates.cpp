#include "isobound/certificates.hpp"

#include <cmath>

#include "json.hpp"

#include "isobound/eigen.hpp"
#include "isobound/error.hpp"

namespace isobound {

std::string to_string(const ProjectorKey &key) {
  std::string s = "(" + (key.vertex < 0 ? std::string("*") : std::to_string(key.vertex));
  if (key.index)
    s += ", " + std::to_string(*key.index);
  return s + ")";
}

ProjectorFamily::ProjectorFamily(int d) : d_(d) {
  if (d < 1)
    throw InvalidInput("projector dimension must be at least 1");
}

void ProjectorFamily::set(ProjectorKey key, HermitianMatrix p) {
  if (p.dim() != d_)
    throw DimensionMismatch("projector at " + to_string(key) + " has dimension " +
                            std::to_string(p.dim()) + ", family dimension is " +
                            std::to_string(d_));
  entries_.insert_or_assign(key, std::move(p));
}

HermitianMatrix ProjectorFamily::get(const ProjectorKey &key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? HermitianMatrix::zeros(d_) : it->second;
}

double projector_residual(const HermitianMatrix &p) {
  const auto sq = multiply(p.dim(), p.entries(), p.entries());
  double s = 0.0;
  const auto e = p.entries();
  for (std::size_t k = 0; k < sq.size(); ++k)
    s += std::norm(sq[k] - e[k]);
  return std::sqrt(s);
}

namespace {

void check_projectors(const ProjectorFamily &fam, CertificateVerdict &verdict) {
  for (const auto &[key, p] : fam.entries()) {
    const double r = projector_residual(p);
    if (r >= kProjectorTolerance)
      verdict.violations.push_back({"projector", key, key, r});
  }
}

/// Entries grouped by index, skipping keys outside the expected shape.
std::vector<std::vector<std::pair<Vertex, const HermitianMatrix *>>>
slices(const Graph &g, int t, const ProjectorFamily &fam, CertificateVerdict &verdict) {
  std::vector<std::vector<std::pair<Vertex, const HermitianMatrix *>>> out(t);
  for (const auto &[key, p] : fam.entries()) {
    if (key.vertex < 0 || key.vertex >= g.order() || !key.index || *key.index < 0 ||
        *key.index >= t) {
      verdict.violations.push_back({"key", key, key, 0.0});
      continue;
    }
    out[*key.index].emplace_back(key.vertex, &p);
  }
  return out;
}

using Slices = std::vector<std::vector<std::pair<Vertex, const HermitianMatrix *>>>;

void check_completeness(int d, const Slices &by_index, CertificateVerdict &verdict) {
  for (int i = 0; i < static_cast<int>(by_index.size()); ++i) {
    std::vector<Complex> sum(static_cast<std::size_t>(d) * d);
    for (const auto &[u, p] : by_index[i]) {
      const auto e = p->entries();
      for (std::size_t k = 0; k < sum.size(); ++k)
        sum[k] += e[k];
    }
    double r = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        r += std::norm(sum[static_cast<std::size_t>(a) * d + b] - (a == b ? 1.0 : 0.0));
    r = std::sqrt(r);
    if (r >= kProjectorTolerance)
      verdict.violations.push_back({"completeness", {-1, i}, {-1, i}, r});
  }
}

/// <P(u,i), P(u,j)> = 0 for i != j.
void check_vertex_orthogonality(const ProjectorFamily &fam, CertificateVerdict &verdict) {
  const auto &entries = fam.entries();
  for (auto a = entries.begin(); a != entries.end(); ++a)
    for (auto b = std::next(a); b != entries.end() && b->first.vertex == a->first.vertex; ++b) {
      if (a->first.index == b->first.index)
        continue;
      const double r = std::abs(trace_inner(a->second, b->second));
      if (r >= kProjectorTolerance)
        verdict.violations.push_back({"orthogonal-vertex", a->first, b->first, r});
    }
}

/// <P(u,i), P(v,j)> = 0 for i != j and uv an edge.
void check_edge_orthogonality(const Graph &g, const Slices &by_index,
                              CertificateVerdict &verdict) {
  const int t = static_cast<int>(by_index.size());
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j)
        continue;
      for (const auto &[u, p] : by_index[i])
        for (const auto &[v, q] : by_index[j]) {
          if (u >= v || !g.adjacent(u, v))
            continue;
          const double r = std::abs(trace_inner(*p, *q));
          if (r >= kProjectorTolerance)
            verdict.violations.push_back({"orthogonal-edge", {u, i}, {v, j}, r});
        }
    }
}

void check_shape(int t, const ProjectorFamily &fam, CertificateVerdict &verdict) {
  for (const auto &[key, p] : fam.entries())
    if (key.vertex < 0 || !key.index || *key.index < 0 || *key.index >= t)
      verdict.violations.push_back({"key", key, key, 0.0});
}

} // namespace

CertificateVerdict verify_quantum_certificate(const Graph &g, int t, const ProjectorFamily &fam) {
  if (t < 0)
    throw InvalidInput("certificate size t must be non-negative");
  CertificateVerdict verdict;
  const auto by_index = slices(g, t, fam, verdict);
  check_projectors(fam, verdict);
  check_completeness(fam.d(), by_index, verdict);
  check_vertex_orthogonality(fam, verdict);
  check_edge_orthogonality(g, by_index, verdict);
  verdict.valid = verdict.violations.empty();
  verdict.value = t;
  return verdict;
}

ProjectorFamily classical_certificate(const Graph &g, const IndependentSetWitness &s) {
  if (s.size != static_cast<int>(s.vertices.size()) || !is_independent_set(g, s.vertices))
    throw InvalidInput("witness is not an independent set of the graph");
  ProjectorFamily fam(1);
  for (int i = 0; i < s.size; ++i)
    fam.set({s.vertices[i], i}, HermitianMatrix::identity(1));
  return fam;
}

namespace {

ProjectorFamily sum_over_indices(const ProjectorFamily &fam) {
  std::map<Vertex, std::vector<Complex>> sums;
  const auto dd = static_cast<std::size_t>(fam.d()) * fam.d();
  for (const auto &[key, p] : fam.entries()) {
    auto &acc = sums[key.vertex];
    acc.resize(dd);
    const auto e = p.entries();
    for (std::size_t k = 0; k < dd; ++k)
      acc[k] += e[k];
  }
  ProjectorFamily out(fam.d());
  for (auto &[u, acc] : sums)
    out.set({u, std::nullopt}, HermitianMatrix(fam.d(), std::move(acc)));
  return out;
}

[[noreturn]] void reject(const CertificateVerdict &verdict) {
  const auto &v = verdict.violations.front();
  throw InvalidInput("invalid quantum certificate: " + v.condition + " violated at " +
                     to_string(v.first) + " / " + to_string(v.second) +
                     " (residual " + std::to_string(v.residual) + ")");
}

} // namespace

ProjectorFamily collapse_to_packing(const ProjectorFamily &fam, int t) {
  if (t < 0)
    throw InvalidInput("certificate size t must be non-negative");
  CertificateVerdict verdict;
  check_shape(t, fam, verdict);
  Slices by_index(t);
  for (const auto &[key, p] : fam.entries())
    if (key.index && *key.index >= 0 && *key.index < t)
      by_index[*key.index].emplace_back(key.vertex, &p);
  check_projectors(fam, verdict);
  check_completeness(fam.d(), by_index, verdict);
  check_vertex_orthogonality(fam, verdict);
  if (!verdict.violations.empty())
    reject(verdict);
  return sum_over_indices(fam);
}

ProjectorFamily collapse_to_packing(const Graph &g, const ProjectorFamily &fam, int t) {
  const auto verdict = verify_quantum_certificate(g, t, fam);
  if (!verdict.valid)
    reject(verdict);
  return sum_over_indices(fam);
}

CertificateVerdict verify_projective_packing(const Graph &g, const ProjectorFamily &fam) {
  CertificateVerdict verdict;
  std::vector<std::pair<Vertex, const HermitianMatrix *>> present;
  long long rank_sum = 0;
  for (const auto &[key, p] : fam.entries()) {
    if (key.vertex < 0 || key.vertex >= g.order() || key.index) {
      verdict.violations.push_back({"key", key, key, 0.0});
      continue;
    }
    const double r = projector_residual(p);
    if (r >= kProjectorTolerance) {
      verdict.violations.push_back({"projector", key, key, r});
      continue;
    }
    const double tr = p.trace().real();
    const double rank = std::round(tr);
    if (std::abs(tr - rank) >= kRankTolerance)
      throw NumericalFailure("projector at " + to_string(key) + " has non-integral trace",
                             std::abs(tr - rank));
    rank_sum += static_cast<long long>(rank);
    present.emplace_back(key.vertex, &p);
  }
  for (std::size_t a = 0; a < present.size(); ++a)
    for (std::size_t b = a + 1; b < present.size(); ++b) {
      const auto [u, p] = present[a];
      const auto [v, q] = present[b];
      if (!g.adjacent(u, v))
        continue;
      const double r = std::abs(trace_inner(*p, *q));
      if (r >= kProjectorTolerance)
        verdict.violations.push_back(
            {"orthogonal-edge", {u, std::nullopt}, {v, std::nullopt}, r});
    }
  verdict.valid = verdict.violations.empty();
  verdict.value = static_cast<double>(rank_sum) / fam.d();
  return verdict;
}

std::vector<std::vector<Complex>> spectral_resolution(const HermitianMatrix &p) {
  const auto es = eigh(p);
  std::vector<std::vector<Complex>> out;
  for (int k = 0; k < es.dim; ++k)
    if (es.values[k] > 0.5) {
      const auto v = es.vector(k);
      out.emplace_back(v.begin(), v.end());
    }
  return out;
}

double eigenvector_cross_residual(const HermitianMatrix &p, const HermitianMatrix &q) {
  if (p.dim() != q.dim())
    throw DimensionMismatch("projectors of different dimensions");
  const auto ps = spectral_resolution(p);
  const auto qs = spectral_resolution(q);
  double worst = 0.0;
  for (const auto &x : ps)
    for (const auto &y : qs) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < x.size(); ++a)
        s += std::conj(x[a]) * y[a];
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

IsotropyResult isotropy_check(const HermitianMatrix &w, const ProjectorFamily &fam,
                              const Graph &g) {
  const int n = g.order();
  const int d = fam.d();
  if (w.dim() != n)
    throw DimensionMismatch("weight matrix dimension does not match graph order");

  struct Composite {
    Vertex u;
    std::vector<Complex> vec;
  };
  std::vector<Composite> vectors;
  for (const auto &[key, p] : fam.entries()) {
    if (key.index || key.vertex < 0 || key.vertex >= n)
      throw InvalidInput("isotropy check expects a packing keyed by vertex only");
    for (auto &psi : spectral_resolution(p)) {
      std::vector<Complex> big(static_cast<std::size_t>(n) * d);
      for (int a = 0; a < d; ++a)
        big[static_cast<std::size_t>(key.vertex) * d + a] = psi[a];
      vectors.push_back({key.vertex, std::move(big)});
    }
  }

  const HermitianMatrix big_w = tensor_with_identity(w, d);
  const int big = big_w.dim();
  std::vector<std::vector<Complex>> applied;
  applied.reserve(vectors.size());
  for (const auto &c : vectors) {
    std::vector<Complex> out(big);
    for (int i = 0; i < big; ++i) {
      Complex s = 0.0;
      for (int j = 0; j < big; ++j)
        s += big_w(i, j) * c.vec[j];
      out[i] = s;
    }
    applied.push_back(std::move(out));
  }

  IsotropyResult result;
  result.dimension = static_cast<int>(vectors.size());
  double worst = 0.0;
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (std::size_t b = 0; b < vectors.size(); ++b) {
      Complex gram = 0.0, form = 0.0;
      for (int i = 0; i < big; ++i) {
        gram += std::conj(vectors[a].vec[i]) * vectors[b].vec[i];
        form += std::conj(vectors[a].vec[i]) * applied[b][i];
      }
      const double gr = std::abs(gram - (a == b ? 1.0 : 0.0));
      const double fr = std::abs(form);
      result.gram_residual = std::max(result.gram_residual, gr);
      result.form_residual = std::max(result.form_residual, fr);
      const double r = std::max(gr, fr);
      if (r >= kIsotropyTolerance && r > worst) {
        worst = r;
        result.worst_pair = std::make_pair(std::min(vectors[a].u, vectors[b].u),
                                           std::max(vectors[a].u, vectors[b].u));
      }
    }
  result.isotropic = !result.worst_pair.has_value();
  return result;
}

ProjectorFamily parse_projector_family(std::string_view json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("projector family: ") + e.what(), e.byte);
  }
  try {
    const int d = doc.at("d").get<int>();
    ProjectorFamily fam(d);
    for (const auto &entry : doc.at("entries")) {
      ProjectorKey key;
      key.vertex = entry.at("vertex").get<int>();
      if (entry.contains("index") && !entry.at("index").is_null())
        key.index = entry.at("index").get<int>();
      const auto re = entry.at("re").get<std::vector<std::vector<double>>>();
      std::vector<std::vector<double>> im;
      if (entry.contains("im"))
        im = entry.at("im").get<std::vector<std::vector<double>>>();
      if (static_cast<int>(re.size()) != d || (!im.empty() && static_cast<int>(im.size()) != d))
        throw DimensionMismatch("projector at " + to_string(key) + " does not have " +
                                std::to_string(d) + " rows");
      std::vector<Complex> m(static_cast<std::size_t>(d) * d);
      for (int a = 0; a < d; ++a) {
        if (static_cast<int>(re[a].size()) != d ||
            (!im.empty() && static_cast<int>(im[a].size()) != d))
          throw DimensionMismatch("projector at " + to_string(key) + " row " +
                                  std::to_string(a) + " does not have " + std::to_string(d) +
                                  " columns");
        for (int b = 0; b < d; ++b)
          m[static_cast<std::size_t>(a) * d + b] = {re[a][b], im.empty() ? 0.0 : im[a][b]};
      }
      fam.set(key, HermitianMatrix(d, std::move(m)));
    }
    return fam;
  } catch (const json::exception &e) {
    throw InvalidInput(std::string("projector family: ") + e.what());
  }
}

std::string emit_projector_family(const ProjectorFamily &fam) {
  using nlohmann::json;
  json doc;
  doc["d"] = fam.d();
  doc["entries"] = json::array();
  const int d = fam.d();
  for (const auto &[key, p] : fam.entries()) {
    json entry;
    entry["vertex"] = key.vertex;
    if (key.index)
      entry["index"] = *key.index;
    json re = json::array(), im = json::array();
    for (int a = 0; a < d; ++a) {
      json rr = json::array(), ii = json::array();
      for (int b = 0; b < d; ++b) {
        rr.push_back(p(a, b).real());
        ii.push_back(p(a, b).imag());
      }
      re.push_back(rr);
      im.push_back(ii);
    }
    entry["re"] = re;
    entry["im"] = im;
    doc["entries"].push_back(entry);
  }
  return doc.dump();
}

} // namespace isobound
