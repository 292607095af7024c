#include "cstat/permutation.hpp"

#include <cctype>
#include <charconv>

#include "cstat/errors.hpp"

namespace cstat {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int a : w_) {
    if (a < 1 || a > size() || seen[static_cast<std::size_t>(a)])
      throw InvalidInput("not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidInput("bad permutation text");
      w.push_back(ch - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
      if (i == text.size()) break;
      int v = 0;
      auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw InvalidInput("bad permutation text");
      w.push_back(v);
      i = static_cast<std::size_t>(p - text.data());
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() < 10;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w_[i]);
  }
  return out;
}

Stat parse_stat(std::string_view name) {
  if (name == "des") return Stat::des;
  if (name == "pk") return Stat::pk;
  if (name == "lpk") return Stat::lpk;
  if (name == "ides") return Stat::ides;
  if (name == "ipk") return Stat::ipk;
  if (name == "ilpk") return Stat::ilpk;
  throw InvalidInput("unknown statistic '" + std::string(name) + "'");
}

std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::des: return "des";
    case Stat::pk: return "pk";
    case Stat::lpk: return "lpk";
    case Stat::ides: return "ides";
    case Stat::ipk: return "ipk";
    case Stat::ilpk: return "ilpk";
  }
  return "?";
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) throw InvalidInput("standardize: repeated letter");
    out[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> inv(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) inv[static_cast<std::size_t>(pi.at(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation reverse_complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> rc(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rc[static_cast<std::size_t>(i - 1)] = n + 1 - pi.at(n + 1 - i);
  return Permutation(std::move(rc));
}

int descents(std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int peaks(std::span<const int> w) {
  int p = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) p += (w[i - 1] < w[i] && w[i] > w[i + 1]);
  return p;
}

int left_peaks(std::span<const int> w) {
  if (w.size() < 2) return 0;
  return peaks(w) + (w[0] > w[1]);
}

int right_valleys(std::span<const int> w) {
  const std::size_t n = w.size();
  if (n < 2) return 0;
  int v = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) v += (w[i - 1] > w[i] && w[i] < w[i + 1]);
  return v + (w[n - 2] > w[n - 1]);
}

int stat(const Permutation& pi, Stat which) {
  switch (which) {
    case Stat::des: return descents(pi.letters());
    case Stat::pk: return peaks(pi.letters());
    case Stat::lpk: return left_peaks(pi.letters());
    case Stat::ides: return descents(inverse(pi).letters());
    case Stat::ipk: return peaks(inverse(pi).letters());
    case Stat::ilpk: return left_peaks(inverse(pi).letters());
  }
  return 0;
}

bool window_matches(std::span<const int> w, int start, std::span<const int> sigma) {
  const std::size_t m = sigma.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if ((w[start + a] < w[start + b]) != (sigma[a] < sigma[b])) return false;
  return true;
}

std::vector<int> occurrence_positions(const Permutation& pi, const Permutation& sigma) {
  std::vector<int> pos;
  const int n = pi.size(), m = sigma.size();
  for (int i = 0; i + m <= n; ++i)
    if (window_matches(pi.letters(), i, sigma.letters())) pos.push_back(i + 1);
  return pos;
}

int count_occurrences(const Permutation& pi, const Permutation& sigma) {
  if (sigma.size() < 2) throw InvalidInput("pattern must have length at least 2");
  return static_cast<int>(occurrence_positions(pi, sigma).size());
}

IntBivariate brute_distribution(int n, const Permutation& sigma, Stat which, int shift, int bound) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > bound)
    throw ResourceLimit("brute force over S_" + std::to_string(n) + " exceeds oracle bound " +
                        std::to_string(bound));
  if (sigma.size() < 2) throw InvalidInput("pattern must have length at least 2");
  const int m = sigma.size();
  // Counts indexed by (occurrences, statistic) accumulated in machine words first.
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(n + 1),
                                             std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  std::vector<int> inv(static_cast<std::size_t>(n));
  for_each_permutation(n, [&](const std::vector<int>& w) {
    int occ = 0;
    for (int i = 0; i + m <= n; ++i) occ += window_matches(w, i, sigma.letters());
    int value = 0;
    switch (which) {
      case Stat::des: value = descents(w); break;
      case Stat::pk: value = peaks(w); break;
      case Stat::lpk: value = left_peaks(w); break;
      default:
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(w[i] - 1)] = i + 1;
        value = which == Stat::ides ? descents(inv) : which == Stat::ipk ? peaks(inv) : left_peaks(inv);
    }
    ++counts[static_cast<std::size_t>(occ)][static_cast<std::size_t>(value)];
  });
  IntBivariate out;
  for (int o = 0; o <= n; ++o)
    for (int v = 0; v <= n; ++v)
      if (counts[o][v] != 0) out.add_to(o, v + shift, BigInt(static_cast<long>(counts[o][v])));
  return out;
}

}  // namespace cstat
