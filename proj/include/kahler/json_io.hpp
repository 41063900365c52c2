#pragma once

#include <nlohmann/json.hpp>
#include <sstream>

#include "block_operator.hpp"
#include "multivector.hpp"
#include "scalar.hpp"

namespace kahler {

using ordered_json = nlohmann::ordered_json;

inline ordered_json report_to_json(SpectrumReport const& rep) {
  ordered_json j;
  j["operator"] = rep.op_name;
  j["j"] = rep.j.to_double();
  j["basis_dim"] = rep.basis_dim;
  j["re"] = rep.max_re;
  ordered_json lines = ordered_json::array();
  for (auto const& l : rep.lines) {
    ordered_json line;
    line["im"] = l.im;
    line["mult"] = l.mult;
    line["predicted_im"] = l.predicted_im;
    line["predicted_mult"] = l.predicted_mult;
    line["matched"] = l.matched;
    lines.push_back(line);
  }
  j["eigenvalues"] = lines;
  return j;
}

inline std::string reports_to_csv(std::vector<SpectrumReport> const& reps) {
  std::ostringstream os;
  os << "operator,j,im,mult,predicted_im,predicted_mult,matched\n";
  for (auto const& rep : reps)
    for (auto const& l : rep.lines) {
      os << rep.op_name << "," << rep.j.to_double() << "," << l.im << "," << l.mult
         << "," << l.predicted_im << "," << l.predicted_mult << ","
         << (l.matched ? "true" : "false") << "\n";
    }
  return os.str();
}

inline std::string reports_to_table(std::vector<SpectrumReport> const& reps) {
  std::ostringstream os;
  os << "    j | eigenvalue (imag) | mult | predicted (imag, mult) | verdict\n";
  for (auto const& rep : reps)
    for (auto const& l : rep.lines) {
      os.setf(std::ios::fixed);
      os.precision(6);
      os.width(5);
      os << rep.j.to_double() << " | ";
      os.width(17);
      os << l.im << " | ";
      os.width(4);
      os << l.mult << " | ";
      os.width(12);
      os << l.predicted_im << ", ";
      os.width(4);
      os << l.predicted_mult << "   | " << (l.matched ? "ok" : "MISMATCH") << "\n";
    }
  return os.str();
}

// Multivector over Gaussian rationals as JSON; the sqrt2 part must vanish.
inline ordered_json multivector_to_json(Multivector<Scalar> const& m) {
  ordered_json j;
  j["dim"] = m.dim();
  ordered_json terms = ordered_json::array();
  for (auto const& [blade, c] : m.terms()) {
    if (!c.srt.is_zero())
      throw std::domain_error("cannot serialize a sqrt2-valued coefficient");
    ordered_json t;
    t["mask"] = blade;
    t["re_num"] = numerator(c.rat.re).str();
    t["re_den"] = denominator(c.rat.re).str();
    t["im_num"] = numerator(c.rat.im).str();
    t["im_den"] = denominator(c.rat.im).str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

}  // namespace kahler
