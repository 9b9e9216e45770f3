#include "napkin/figures.hpp"

#include "napkin/exact_engine.hpp"

#include <sstream>
#include <stdexcept>

namespace napkin {

namespace {

#include "figure2_reference.inc"  // defines kFigure2ReferenceCsv

}  // namespace

Proportion Proportion::round(const mpq_class& value) {
  const mpz_class scaled = value.get_num() * 10000;
  const mpz_class& den = value.get_den();
  mpz_class quotient, remainder;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(2 * remainder, den);
  if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;
  if (!quotient.fits_slong_p()) throw std::overflow_error("proportion out of range");
  return Proportion{quotient.get_si()};
}

Proportion Proportion::parse(const std::string& text) {
  const auto dot = text.find('.');
  const std::string whole = text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() || frac.size() > 4 || whole.find_first_not_of("0123456789") != std::string::npos ||
      frac.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a four-place decimal: '" + text + "'");
  }
  frac.resize(4, '0');
  return Proportion{std::stol(whole) * 10000 + std::stol(frac)};
}

std::string Proportion::to_string() const {
  const long whole = units / 10000;
  std::string frac = std::to_string(units % 10000);
  frac.insert(0, 4 - frac.size(), '0');
  return std::to_string(whole) + "." + frac;
}

std::vector<FigureRow> proportion_series(const IntervallicStrategy& strategy, std::uint32_t n_min,
                                         std::uint32_t n_max) {
  if (n_min < 2) throw std::domain_error("proportions need tables of at least 2 seats");
  ExactEngine engine(strategy);
  std::vector<FigureRow> rows;
  for (std::uint32_t n = n_min; n <= n_max; ++n) {
    mpq_class ratio = engine.table(n).to_rational() / n;
    ratio.canonicalize();
    rows.push_back(FigureRow{strategy.name(), n, Proportion::round(ratio), "computed"});
  }
  return rows;
}

std::vector<FigureRow> parse_reference_csv(std::istream& in) {
  std::vector<FigureRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "series,n,proportion") throw std::invalid_argument("unexpected reference header: " + line);
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    std::string series, n, proportion;
    if (!std::getline(fields, series, ',') || !std::getline(fields, n, ',') || !std::getline(fields, proportion)) {
      throw std::invalid_argument("malformed reference row: " + line);
    }
    rows.push_back(FigureRow{series, static_cast<std::uint32_t>(std::stoul(n)), Proportion::parse(proportion),
                             "paper"});
  }
  return rows;
}

std::vector<FigureRow> builtin_reference() {
  std::istringstream in{std::string(kFigure2ReferenceCsv)};
  return parse_reference_csv(in);
}

std::vector<FigureRow> reference_only_series() {
  std::vector<FigureRow> out;
  for (auto& row : builtin_reference()) {
    if (row.strategy == "trap-setting" || row.strategy == "modified-napkin-shunning") out.push_back(row);
  }
  return out;
}

std::vector<Figure6Row> figure6_rows(std::uint32_t max_n) {
  ExactEngine engine(long_trap_setting());
  std::vector<Figure6Row> rows;
  for (std::uint32_t n = 0; n <= max_n; ++n) {
    Figure6Row row;
    row.n = n;
    if (n >= 1) row.inner = engine.inner(n);
    row.outer = engine.outer(n);
    row.asymmetric = engine.asymmetric(n);
    if (n >= 2) {
      row.table = engine.table(n);
    } else if (n == 1) {
      // A single seat with a single napkin: the diner always gets it.
      row.table = Dyadic(0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace napkin
