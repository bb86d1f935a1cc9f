#include "basketchef/report.h"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "basketchef/session.h"

namespace basketchef {

namespace {

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("not a number: \"" + std::string(text) + "\"");
  }
  return value;
}

std::string column_label(std::string_view prefix, double value) {
  return csv_quote(std::string(prefix) + format_number(value));
}

}  // namespace

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_identifier_csv(std::ostream& out, const Model& model, std::size_t k, std::size_t h) {
  const Corpus& corpus = model.corpus();
  auto index = model.identifiers(k, h);
  out << "\"category\",\"rank\",\"item\",\"support\"\n";
  for (const IdentifierSet& set : index->sets) {
    for (std::size_t i = 0; i < set.identifiers.size(); ++i) {
      out << csv_quote(corpus.category(set.category).name) << ',' << (i + 1) << ','
          << csv_quote(corpus.item_name(set.identifiers[i])) << ',' << format_number(set.supports[i])
          << '\n';
    }
  }
}

void write_differentiator_csv(std::ostream& out, const Model& model, std::size_t category,
                              std::uint32_t top) {
  const Corpus& corpus = model.corpus();
  const Category& cat = corpus.category(category);
  const RankTable& ranks = model.stats().ranks(category);
  const auto limit = static_cast<std::uint32_t>(
      std::min<std::size_t>(top, ranks.item_count()));
  out << "\"category\",\"subcategory\",\"rank\",\"item\",\"p_rs\"\n";
  for (std::size_t s = 0; s < cat.subcategories.size(); ++s) {
    for (std::uint32_t r = 1; r <= limit; ++r) {
      const ItemId item = ranks.item_at_rank(s, r);
      out << csv_quote(cat.name) << ',' << csv_quote(cat.subcategories[s].name) << ',' << r << ','
          << csv_quote(corpus.item_name(item)) << ',' << format_number(ranks.score(s, item)) << '\n';
    }
  }
}

void write_threshold_table(std::ostream& out, const std::vector<double>& n_values,
                           const std::vector<double>& theta_values) {
  if (n_values.empty() || theta_values.empty()) {
    throw std::invalid_argument("threshold table needs nonempty n and theta ranges");
  }
  out << "\"theta\"";
  for (double n : n_values) out << ',' << column_label("n=", n);
  out << '\n';
  for (double theta : theta_values) {
    out << format_number(theta);
    for (double n : n_values) out << ',' << min_items_to_activate(n, theta);
    out << '\n';
  }
}

void write_score_curve(std::ostream& out, const std::vector<double>& n_values,
                       std::uint32_t rank_max) {
  if (n_values.empty() || rank_max < 1) {
    throw std::invalid_argument("score curve needs n values and rank_max >= 1");
  }
  for (double n : n_values) {
    if (!(n >= 1.0)) throw std::invalid_argument("n must be >= 1");
  }
  out << "\"rank\"";
  for (double n : n_values) out << ',' << column_label("n=", n);
  out << '\n';
  for (std::uint32_t r = 1; r <= rank_max; ++r) {
    out << r;
    for (double n : n_values) out << ',' << format_number(score_increment(r, n));
    out << '\n';
  }
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    const double lo = parse_double(text.substr(0, dots));
    const double hi = parse_double(text.substr(dots + 2));
    if (lo != std::floor(lo) || hi != std::floor(hi) || hi < lo) {
      throw std::invalid_argument("range must be integral and ascending: \"" + std::string(text) +
                                  "\"");
    }
    for (double v = lo; v <= hi; v += 1.0) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_double(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace basketchef
