#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dio/equation.hpp"
#include "dio/family.hpp"

namespace dio {

using Json = nlohmann::ordered_json;

// Provenance of a completeness claim.
enum class Completeness { Certified, SearchOnly, KBTrusted };

const char* to_string(Completeness c);
Completeness completeness_from_string(const std::string& s);

// Description of a solution set, together with its verification obligation.
struct SolutionDescription {
  enum class Kind { Finite, InfiniteFamilies, InfiniteRecurrence, Empty };
  Kind kind = Kind::Empty;
  Completeness completeness = Completeness::Certified;
  std::vector<std::vector<BigInt>> points;        // Finite
  std::vector<PolynomialFamily> families;         // InfiniteFamilies (may be
                                                  // empty for citation-level claims)
  std::vector<std::vector<BigInt>> extra_points;  // isolated points next to families
  std::vector<std::vector<BigInt>> seeds;         // InfiniteRecurrence
  AffineMap map;                                  // InfiniteRecurrence
  std::string detail;                             // method note or citation

  static SolutionDescription finite(std::vector<std::vector<BigInt>> pts, Completeness c,
                                    std::string detail = {});
  static SolutionDescription empty_set(std::string detail = {});
  static SolutionDescription infinite_families(std::vector<PolynomialFamily> fams, Completeness c,
                                               std::string detail = {});
  static SolutionDescription infinite_recurrence(std::vector<std::vector<BigInt>> seeds,
                                                 AffineMap map, Completeness c,
                                                 std::string detail = {});

  // Re-checks the evidence against the equation: points evaluate to zero,
  // families substitute to the zero polynomial, recurrences verify
  // symbolically. Citation-level family claims (no stored families) pass.
  bool verify(const Polynomial& eq, std::string* why = nullptr) const;

  Json to_json() const;
  static SolutionDescription from_json(const Json& j);
};

struct DeciderReport {
  std::string decider_id;
  enum class Outcome { Resolved, Reduced, Unknown } outcome = Outcome::Unknown;
  std::optional<SolutionDescription> description;  // for Resolved
  Json certificate;                                // empty when none
  std::string reduced_to;                          // canonical key, for Reduced
  Json transformation;                             // reduction record
  std::string detail;
  double elapsed_ms = 0;

  static DeciderReport unknown(std::string id, std::string detail = {});
  static DeciderReport resolved(std::string id, SolutionDescription d, Json cert = {});

  Json to_json() const;
};

// json helpers
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);
Json tuple_to_json(const std::vector<BigInt>& t);
std::vector<BigInt> tuple_from_json(const Json& j);
Json map_to_json(const AffineMap& m);
AffineMap map_from_json(const Json& j);

}  // namespace dio
