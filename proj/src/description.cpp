#include "dio/description.hpp"

#include <algorithm>
#include <stdexcept>

namespace dio {

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::Certified:
      return "certified";
    case Completeness::SearchOnly:
      return "search-only";
    case Completeness::KBTrusted:
      return "kb-trusted";
  }
  return "?";
}

Completeness completeness_from_string(const std::string& s) {
  if (s == "certified") return Completeness::Certified;
  if (s == "search-only") return Completeness::SearchOnly;
  if (s == "kb-trusted") return Completeness::KBTrusted;
  throw std::runtime_error("bad completeness: " + s);
}

Json big_to_json(const BigInt& v) { return v.str(); }

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  return BigInt(j.get<std::string>());
}

Json tuple_to_json(const std::vector<BigInt>& t) {
  Json a = Json::array();
  for (const auto& v : t) a.push_back(big_to_json(v));
  return a;
}

std::vector<BigInt> tuple_from_json(const Json& j) {
  std::vector<BigInt> t;
  for (const auto& v : j) t.push_back(big_from_json(v));
  return t;
}

Json map_to_json(const AffineMap& m) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : m.matrix) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(big_to_json(v));
    rows.push_back(r);
  }
  j["matrix"] = rows;
  j["offset"] = tuple_to_json(m.offset);
  return j;
}

AffineMap map_from_json(const Json& j) {
  AffineMap m;
  for (const auto& row : j.at("matrix")) {
    std::vector<BigInt> r;
    for (const auto& v : row) r.push_back(big_from_json(v));
    m.matrix.push_back(r);
  }
  m.offset = tuple_from_json(j.at("offset"));
  return m;
}

SolutionDescription SolutionDescription::finite(std::vector<std::vector<BigInt>> pts,
                                                Completeness c, std::string detail) {
  SolutionDescription d;
  d.kind = Kind::Finite;
  d.completeness = c;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  d.points = std::move(pts);
  d.detail = std::move(detail);
  return d;
}

SolutionDescription SolutionDescription::empty_set(std::string detail) {
  SolutionDescription d;
  d.kind = Kind::Empty;
  d.completeness = Completeness::Certified;
  d.detail = std::move(detail);
  return d;
}

SolutionDescription SolutionDescription::infinite_families(std::vector<PolynomialFamily> fams,
                                                           Completeness c, std::string detail) {
  SolutionDescription d;
  d.kind = Kind::InfiniteFamilies;
  d.completeness = c;
  d.families = std::move(fams);
  d.detail = std::move(detail);
  return d;
}

SolutionDescription SolutionDescription::infinite_recurrence(std::vector<std::vector<BigInt>> seeds,
                                                             AffineMap map, Completeness c,
                                                             std::string detail) {
  SolutionDescription d;
  d.kind = Kind::InfiniteRecurrence;
  d.completeness = c;
  d.seeds = std::move(seeds);
  d.map = std::move(map);
  d.detail = std::move(detail);
  return d;
}

bool SolutionDescription::verify(const Polynomial& eq, std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  switch (kind) {
    case Kind::Empty:
      return true;
    case Kind::Finite:
      for (const auto& p : points)
        if (eq.evaluate(p) != 0) return fail("listed tuple does not satisfy the equation");
      return true;
    case Kind::InfiniteFamilies:
      for (const auto& f : families) {
        try {
          if (!verify_family(eq, f)) return fail("family substitution is nonzero");
        } catch (const std::exception& e) {
          return fail(e.what());
        }
      }
      for (const auto& p : extra_points)
        if (eq.evaluate(p) != 0) return fail("extra point does not satisfy the equation");
      return true;
    case Kind::InfiniteRecurrence: {
      try {
        if (!verify_recurrence(eq, seeds, map)) return fail("recurrence verification failed");
      } catch (const std::exception& e) {
        return fail(e.what());
      }
      return true;
    }
  }
  return false;
}

Json SolutionDescription::to_json() const {
  Json j;
  switch (kind) {
    case Kind::Finite:
      j["kind"] = "finite";
      break;
    case Kind::InfiniteFamilies:
      j["kind"] = "infinite-families";
      break;
    case Kind::InfiniteRecurrence:
      j["kind"] = "infinite-recurrence";
      break;
    case Kind::Empty:
      j["kind"] = "empty";
      break;
  }
  j["completeness"] = to_string(completeness);
  if (kind == Kind::Finite) {
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(tuple_to_json(p));
    j["points"] = pts;
  }
  if (kind == Kind::InfiniteFamilies) {
    Json fams = Json::array();
    for (const auto& f : families) {
      Json comps = Json::array();
      for (const auto& c : f.components) comps.push_back(c.text());
      fams.push_back(comps);
    }
    j["families"] = fams;
    if (!extra_points.empty()) {
      Json pts = Json::array();
      for (const auto& p : extra_points) pts.push_back(tuple_to_json(p));
      j["extraPoints"] = pts;
    }
  }
  if (kind == Kind::InfiniteRecurrence) {
    Json seeds_j = Json::array();
    for (const auto& s : seeds) seeds_j.push_back(tuple_to_json(s));
    j["seeds"] = seeds_j;
    j["map"] = map_to_json(map);
  }
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

SolutionDescription SolutionDescription::from_json(const Json& j) {
  SolutionDescription d;
  std::string k = j.at("kind");
  if (k == "finite")
    d.kind = Kind::Finite;
  else if (k == "infinite-families")
    d.kind = Kind::InfiniteFamilies;
  else if (k == "infinite-recurrence")
    d.kind = Kind::InfiniteRecurrence;
  else if (k == "empty")
    d.kind = Kind::Empty;
  else
    throw std::runtime_error("bad description kind");
  d.completeness = completeness_from_string(j.at("completeness"));
  if (j.contains("points"))
    for (const auto& p : j["points"]) d.points.push_back(tuple_from_json(p));
  if (j.contains("families")) {
    for (const auto& fj : j["families"]) {
      std::vector<std::string> texts;
      for (const auto& c : fj) texts.push_back(c.get<std::string>());
      d.families.push_back(PolynomialFamily::from_texts(texts));
    }
  }
  if (j.contains("extraPoints"))
    for (const auto& p : j["extraPoints"]) d.extra_points.push_back(tuple_from_json(p));
  if (j.contains("seeds"))
    for (const auto& s : j["seeds"]) d.seeds.push_back(tuple_from_json(s));
  if (j.contains("map")) d.map = map_from_json(j["map"]);
  if (j.contains("detail")) d.detail = j["detail"].get<std::string>();
  return d;
}

DeciderReport DeciderReport::unknown(std::string id, std::string detail) {
  DeciderReport r;
  r.decider_id = std::move(id);
  r.outcome = Outcome::Unknown;
  r.detail = std::move(detail);
  return r;
}

DeciderReport DeciderReport::resolved(std::string id, SolutionDescription d, Json cert) {
  DeciderReport r;
  r.decider_id = std::move(id);
  r.outcome = Outcome::Resolved;
  r.description = std::move(d);
  r.certificate = std::move(cert);
  return r;
}

Json DeciderReport::to_json() const {
  Json j;
  j["decider"] = decider_id;
  switch (outcome) {
    case Outcome::Resolved:
      j["outcome"] = "resolved";
      break;
    case Outcome::Reduced:
      j["outcome"] = "reduced";
      break;
    case Outcome::Unknown:
      j["outcome"] = "unknown";
      break;
  }
  if (description) j["description"] = description->to_json();
  if (!certificate.is_null() && !certificate.empty()) j["certificate"] = certificate;
  if (!reduced_to.empty()) j["reducedTo"] = reduced_to;
  if (!transformation.is_null() && !transformation.empty()) j["transformation"] = transformation;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

}  // namespace dio
