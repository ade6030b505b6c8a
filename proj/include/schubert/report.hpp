#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/charring.hpp"
#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

inline constexpr const char* kEngineVersion = "0.1.0";

struct Counterexample {
  Word element;
  Word inverse;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string note;
};

/// Result of one named verification sweep. A report passes exactly when it
/// carries no counterexamples; `details` holds informational rows only.
struct Report {
  std::string check_id;
  std::string cartan_type;
  std::uint64_t universe_size = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

/// Parallelism and size limits shared by every sweep.
struct SweepOptions {
  std::uint64_t guard = 1'000'000;
  unsigned workers = 1;
};

/// Thrown when a check is requested for a root system it does not apply to.
class ApplicabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

nlohmann::json word_json(const Word& w);
nlohmann::json character_json(const RootSystem& rs, const Character& c);
nlohmann::json labeling_json(const RootSystem& rs);
nlohmann::json to_json(const Report& r, const RootSystem& rs);

/// Runs `body` and records its wall time into the report.
template <class F>
Report timed(std::string check_id, const RootSystem& rs, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.check_id = std::move(check_id);
  r.cartan_type = rs.type().name();
  body(r);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace schubert
