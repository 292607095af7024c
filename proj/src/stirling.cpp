#include "cstat/stirling.hpp"

#include <string>

#include "cstat/errors.hpp"

namespace cstat {

StirlingPermutation::StirlingPermutation(std::vector<int> word, int r, int k)
    : w_(std::move(word)), r_(r), k_(k) {
  if (!is_valid_stirling(w_, r, k)) throw InvalidInput("not an r-Stirling permutation");
}

std::string StirlingPermutation::to_string() const {
  std::string out;
  const bool compact = k_ < 10;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w_[i]);
  }
  return out;
}

StirlingStat parse_stirling_stat(std::string_view name) {
  if (name == "plat") return StirlingStat::plat;
  if (name == "lplat") return StirlingStat::lplat;
  if (name == "ascplat") return StirlingStat::ascplat;
  if (name == "lascplat") return StirlingStat::lascplat;
  if (name == "des") return StirlingStat::des;
  throw InvalidInput("unknown r-Stirling statistic '" + std::string(name) + "'");
}

bool is_valid_stirling(std::span<const int> word, int r, int k) {
  if (r < 1 || k < 0 || word.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(k)) return false;
  std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
  for (int a : word) {
    if (a < 1 || a > k) return false;
    ++count[static_cast<std::size_t>(a)];
  }
  for (int a = 1; a <= k; ++a)
    if (count[static_cast<std::size_t>(a)] != r) return false;
  // Nesting: scanning left to right, a letter may reappear only if nothing smaller
  // has been seen since its previous occurrence.
  std::vector<int> last(static_cast<std::size_t>(k) + 1, -1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int a = word[i];
    const int prev = last[static_cast<std::size_t>(a)];
    if (prev >= 0)
      for (std::size_t l = static_cast<std::size_t>(prev) + 1; l < i; ++l)
        if (word[l] < a) return false;
    last[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  return true;
}

int stirling_stat(std::span<const int> w, StirlingStat which) {
  const std::size_t n = w.size();
  int c = 0;
  switch (which) {
    case StirlingStat::plat:
      for (std::size_t i = 0; i + 1 < n; ++i) c += w[i] == w[i + 1];
      return c;
    case StirlingStat::lplat: {
      std::vector<bool> seen;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto a = static_cast<std::size_t>(w[i]);
        if (a >= seen.size()) seen.resize(a + 1, false);
        if (!seen[a] && w[i] == w[i + 1]) ++c;
        seen[a] = true;
      }
      return c;
    }
    case StirlingStat::ascplat:
      for (std::size_t i = 1; i + 1 < n; ++i) c += (w[i - 1] < w[i] && w[i] == w[i + 1]);
      return c;
    case StirlingStat::lascplat:
      c = stirling_stat(w, StirlingStat::ascplat);
      return c + (n >= 2 && w[0] == w[1]);
    case StirlingStat::des:
      if (n == 0) return 0;
      for (std::size_t i = 0; i + 1 < n; ++i) c += w[i] > w[i + 1];
      return c + 1;
  }
  return 0;
}

BigInt stirling_cardinality(int r, int k) {
  BigInt p(1);
  for (int j = 1; j <= k - 1; ++j) p *= r * j + 1;
  return p;
}

namespace {

void check_size(int r, int k, std::uint64_t max_cardinality) {
  if (r < 1 || k < 0) throw InvalidInput("r-Stirling enumeration needs r >= 1 and k >= 0");
  if (stirling_cardinality(r, k) > BigInt(std::to_string(max_cardinality)))
    throw ResourceLimit("|Q_{" + std::to_string(r) + "," + std::to_string(k) +
                        "}| exceeds the cardinality bound " + std::to_string(max_cardinality));
}

void insert_blocks(std::vector<int>& w, int next, int r, int k,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (next > k) {
    visit(w);
    return;
  }
  const std::size_t slots = w.size() + 1;
  for (std::size_t pos = 0; pos < slots; ++pos) {
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::size_t>(r), next);
    insert_blocks(w, next + 1, r, k, visit);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + r));
  }
}

}  // namespace

void for_each_stirling(int r, int k, const std::function<void(const std::vector<int>&)>& visit,
                       std::uint64_t max_cardinality) {
  check_size(r, k, max_cardinality);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(r * k));
  insert_blocks(w, 1, r, k, visit);
}

std::vector<StirlingPermutation> enumerate_stirling(int r, int k, std::uint64_t max_cardinality) {
  std::vector<StirlingPermutation> out;
  for_each_stirling(r, k, [&](const std::vector<int>& w) { out.emplace_back(w, r, k); }, max_cardinality);
  return out;
}

IntBivariate stirling_joint_distribution(int r, int k, StirlingStat first, StirlingStat second,
                                         std::uint64_t max_cardinality) {
  const std::size_t dim = static_cast<std::size_t>(r * k) + 2;
  std::vector<std::vector<long long>> counts(dim, std::vector<long long>(dim, 0));
  for_each_stirling(
      r, k,
      [&](const std::vector<int>& w) {
        ++counts[static_cast<std::size_t>(stirling_stat(w, first))][static_cast<std::size_t>(stirling_stat(w, second))];
      },
      max_cardinality);
  std::vector<std::vector<BigInt>> rows(dim, std::vector<BigInt>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rows[i][j] = static_cast<long>(counts[i][j]);
  return IntBivariate(std::move(rows));
}

IntPolynomial stirling_distribution(int r, int k, StirlingStat which, std::uint64_t max_cardinality) {
  return stirling_joint_distribution(r, k, which, StirlingStat::plat, max_cardinality).second_at_one();
}

}  // namespace cstat
