#include "kcut/sepfamily.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace kcut {

namespace {

std::vector<int> from_mask(unsigned long long mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) out.push_back(i);
  return out;
}

bool verification_feasible(int ground, int s1, int s2) {
  return ground <= 16 && s1 <= 3 && s2 <= 3;
}

// Enumerate subsets of size <= s as bitmasks.
void small_subsets(int n, int s, std::vector<unsigned long long>& out) {
  out.push_back(0);
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == s) return;
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      unsigned long long mask = 0;
      for (int v : pick) mask |= 1ULL << v;
      out.push_back(mask);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

bool verify_separating_family(const SeparatingFamily& family) {
  int n = family.ground_size;
  if (n > 62) throw InputError("family verification needs at most 62 elements");
  std::vector<unsigned long long> member_masks;
  for (const auto& m : family.members) {
    unsigned long long mask = 0;
    for (int v : m) mask |= 1ULL << v;
    member_masks.push_back(mask);
  }
  std::vector<unsigned long long> x1s, x2s;
  small_subsets(n, family.s1, x1s);
  small_subsets(n, family.s2, x2s);
  for (auto x1 : x1s)
    for (auto x2 : x2s) {
      if (x1 & x2) continue;
      bool covered = false;
      for (auto m : member_masks)
        if ((x1 & ~m) == 0 && (x2 & m) == 0) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

SeparatingFamily build_separating_family(int ground_size, int s1, int s2,
                                         std::uint64_t seed,
                                         const SeparatingFamilyOptions& opts) {
  if (ground_size < 0) throw InputError("negative ground size");
  if (s1 < 0 || s2 < 0) throw InputError("negative separation parameter");
  s1 = std::min(s1, ground_size);
  s2 = std::min(s2, ground_size);
  SeparatingFamily family;
  family.ground_size = ground_size;
  family.s1 = s1;
  family.s2 = s2;

  std::vector<int> full(ground_size);
  for (int i = 0; i < ground_size; ++i) full[i] = i;
  if (s1 == 0) {
    family.members.push_back({});
    return family;
  }
  if (s2 == 0) {
    family.members.push_back(full);
    return family;
  }
  if (ground_size <= opts.exhaustive_limit) {
    for (unsigned long long mask = 0; mask < (1ULL << ground_size); ++mask)
      family.members.push_back(from_mask(mask, ground_size));
    return family;
  }

  std::mt19937_64 rng(seed);
  double log_target = std::pow(static_cast<double>(s1 + s2),
                               static_cast<double>(std::min(s1, 24)));
  double want = log_target * (std::log(static_cast<double>(ground_size) + 1.0) + 1.0);
  std::size_t draws = opts.max_members;
  if (want < static_cast<double>(opts.max_members))
    draws = static_cast<std::size_t>(want) + 1;

  bool can_verify = verification_feasible(ground_size, s1, s2);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::set<std::vector<int>> seen;
    seen.insert({});
    seen.insert(full);
    // Keep each element independently with probability s1/(s1+s2).
    std::uint64_t threshold =
        static_cast<std::uint64_t>((static_cast<double>(s1) / (s1 + s2)) *
                                   18446744073709551615.0);
    while (seen.size() < draws + 2) {
      std::vector<int> member;
      for (int i = 0; i < ground_size; ++i)
        if (rng() <= threshold) member.push_back(i);
      seen.insert(std::move(member));
    }
    family.members.assign(seen.begin(), seen.end());
    if (!can_verify || verify_separating_family(family)) return family;
    draws = std::min(draws * 2, opts.max_members * 16);
  }
  throw std::runtime_error("separating family construction failed verification");
}

}  // namespace kcut
