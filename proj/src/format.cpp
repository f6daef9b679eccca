#include "spanbound/format.hpp"

#include <cctype>

namespace spanbound {

bool is_plain_number(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  bool seen_slash = false, digit_run = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit_run = true;
    } else if (s[i] == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      return false;
    }
  }
  return digit_run;
}

void TermWriter::add(const std::string& coeff, const std::string& monomial) {
  std::string term;
  if (monomial.empty()) {
    term = is_plain_number(coeff) ? coeff : "(" + coeff + ")";
  } else if (coeff == "1") {
    term = monomial;
  } else if (coeff == "-1") {
    term = "-" + monomial;
  } else if (is_plain_number(coeff)) {
    term = coeff + "*" + monomial;
  } else {
    term = "(" + coeff + ")*" + monomial;
  }
  if (terms_.empty()) {
    out_ = term;
  } else if (term[0] == '-') {
    out_ += " - " + term.substr(1);
  } else {
    out_ += " + " + term;
  }
  terms_.push_back(std::move(term));
}

}  // namespace spanbound
