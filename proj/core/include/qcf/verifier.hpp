#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcf/registry.hpp"

namespace qcf {

inline constexpr const char* kDegreeBoundComplete = "degree-bound-complete";
inline constexpr const char* kSampled = "sampled";

struct Mismatch {
  std::string coefficient;  // exponent of q, "17" or "35/2"
  int t_index = 0;
  int scale = 1;
  std::string pair;
  std::string lhs;
  std::string rhs;
  std::size_t assignment = 0;  // index into VerificationReport::assignments
};

struct VerificationReport {
  std::string id;
  int order = 0;
  int draws = 0;
  std::uint64_t seed = 0;
  std::string certificate;
  bool pass = false;
  std::vector<std::map<std::string, std::string>> assignments;
  std::optional<Mismatch> first_mismatch;
  std::optional<std::string> error;
  std::vector<std::string> rings;
  int pairs_checked = 0;
  int redraws = 0;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  int order = 50;
  int draws = 5;
  std::uint64_t seed = 0;
  std::optional<int> mutate_k;  // add q^k to every right side
};

VerificationReport verify(const std::string& id, const VerifyOptions& opts);
VerificationReport verify(const std::string& id, int order, int draws, std::uint64_t seed);

/// All rows, sorted by id whatever the completion order. threads = 0 picks
/// the hardware concurrency.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts, unsigned threads = 0);

struct IdentityInfo {
  std::string id;
  std::string description;
  std::string signature;
};

std::vector<IdentityInfo> list_identities();
std::vector<DegreeBound> degree_bound_table(const std::string& id, int order);

/// The k-th small-height rational other than 0 and +-1:
/// 2, -2, 1/2, -1/2, 3, -3, 3/2, -3/2, 1/3, -1/3, 2/3, ...
Rat grid_value(std::size_t k);

}  // namespace qcf
