// CSV analysis reports. String fields are always double-quoted, numbers are
// written in shortest round-trip form, and every table starts with a header.

#ifndef BASKETCHEF_REPORT_H_
#define BASKETCHEF_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "basketchef/model.h"

namespace basketchef {

std::string csv_quote(std::string_view field);
std::string format_number(double value);

// "category","rank","item","support"
void write_identifier_csv(std::ostream& out, const Model& model, std::size_t k, std::size_t h);

// "category","subcategory","rank","item","p_rs" for ranks 1..top of every
// subcategory of the category. Throws std::out_of_range for a bad category.
void write_differentiator_csv(std::ostream& out, const Model& model, std::size_t category,
                              std::uint32_t top);

// Rows theta, columns n: min_items_to_activate(n, theta).
void write_threshold_table(std::ostream& out, const std::vector<double>& n_values,
                           const std::vector<double>& theta_values);

// Rows rank 1..rank_max, columns n: rank^(-1/n).
void write_score_curve(std::ostream& out, const std::vector<double>& n_values,
                       std::uint32_t rank_max);

// "3", "1..10" or "1,2,5". Throws std::invalid_argument on anything else.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace basketchef

#endif  // BASKETCHEF_REPORT_H_
