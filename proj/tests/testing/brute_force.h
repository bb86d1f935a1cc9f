// Brute-force statistics oracle over a RawCorpus, in exact rational
// arithmetic. Written straight from the definitions: count rows, divide, sum
// over sibling subcategories, sort. Shares no code with the engine.

#ifndef BASKETCHEF_TESTING_BRUTE_FORCE_H_
#define BASKETCHEF_TESTING_BRUTE_FORCE_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "testing/random_corpus.h"

namespace basketchef::testing {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
  bool operator>(const Rational& o) const { return o < *this; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

class BruteForce {
 public:
  explicit BruteForce(RawCorpus raw) : raw_(std::move(raw)) {
    for (const RawRow& r : raw_.rows) {
      for (const std::string& item : r.items) {
        if (std::find(vocab_.begin(), vocab_.end(), item) == vocab_.end()) vocab_.push_back(item);
      }
      if (std::find(categories_.begin(), categories_.end(), r.category) == categories_.end()) {
        categories_.push_back(r.category);
      }
    }
  }

  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<std::string>& categories() const { return categories_; }

  std::vector<std::string> subcategories(const std::string& cat) const {
    std::vector<std::string> out;
    for (const RawRow& r : raw_.rows) {
      if (r.category == cat && std::find(out.begin(), out.end(), r.subcategory) == out.end()) {
        out.push_back(r.subcategory);
      }
    }
    return out;
  }

  std::size_t row_count(const std::string& cat) const {
    return static_cast<std::size_t>(std::count_if(raw_.rows.begin(), raw_.rows.end(),
                                                  [&](const RawRow& r) { return r.category == cat; }));
  }

  Rational support(const std::string& cat, const std::string& item) const {
    std::int64_t hit = 0, all = 0;
    for (const RawRow& r : raw_.rows) {
      if (r.category != cat) continue;
      ++all;
      if (contains(r, item)) ++hit;
    }
    return {hit, all};
  }

  Rational global_support(const std::string& item) const {
    std::int64_t hit = 0;
    for (const RawRow& r : raw_.rows) {
      if (contains(r, item)) ++hit;
    }
    return {hit, static_cast<std::int64_t>(raw_.rows.size())};
  }

  std::vector<std::string> identifiers(const std::string& cat, std::size_t k, std::size_t h) const {
    // Sort (global support, vocabulary position) pairs; take the first h.
    std::vector<std::pair<Rational, std::size_t>> global;
    for (std::size_t j = 0; j < vocab_.size(); ++j) global.push_back({global_support(vocab_[j]), j});
    std::sort(global.begin(), global.end(), [](const auto& a, const auto& b) {
      if (a.first > b.first || b.first > a.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::set<std::string> excluded;
    for (std::size_t i = 0; i < h && i < global.size(); ++i) excluded.insert(vocab_[global[i].second]);

    std::vector<std::pair<Rational, std::size_t>> local;
    for (std::size_t j = 0; j < vocab_.size(); ++j) local.push_back({support(cat, vocab_[j]), j});
    std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) {
      if (a.first > b.first || b.first > a.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::vector<std::string> out;
    for (const auto& [sup, j] : local) {
      if (out.size() == k) break;
      if (sup.num == 0 || excluded.count(vocab_[j])) continue;
      out.push_back(vocab_[j]);
    }
    return out;
  }

  Rational conditional(const std::string& cat, const std::string& sub,
                       const std::string& item) const {
    std::int64_t hit = 0, all = 0;
    for (const RawRow& r : raw_.rows) {
      if (r.category != cat || r.subcategory != sub) continue;
      ++all;
      if (contains(r, item)) ++hit;
    }
    return {hit, all};
  }

  Rational differentiator(const std::string& cat, const std::string& sub,
                          const std::string& item) const {
    Rational p = conditional(cat, sub, item);
    for (const std::string& other : subcategories(cat)) {
      if (other != sub) p = p - conditional(cat, other, item);
    }
    return p;
  }

  // item name -> rank within (cat, sub)
  std::map<std::string, std::uint32_t> ranks(const std::string& cat, const std::string& sub) const {
    std::vector<std::pair<Rational, std::size_t>> scored;
    for (std::size_t j = 0; j < vocab_.size(); ++j) {
      scored.push_back({differentiator(cat, sub, vocab_[j]), j});
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::map<std::string, std::uint32_t> out;
    for (std::size_t pos = 0; pos < scored.size(); ++pos) {
      out[vocab_[scored[pos].second]] = static_cast<std::uint32_t>(pos + 1);
    }
    return out;
  }

 private:
  static bool contains(const RawRow& r, const std::string& item) {
    return std::find(r.items.begin(), r.items.end(), item) != r.items.end();
  }

  RawCorpus raw_;
  std::vector<std::string> vocab_;
  std::vector<std::string> categories_;
};

}  // namespace basketchef::testing

#endif  // BASKETCHEF_TESTING_BRUTE_FORCE_H_
