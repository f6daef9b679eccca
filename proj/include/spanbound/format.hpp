#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spanbound {

// Renders sum-of-terms text that the expression parser reads back unchanged.
// Each term is (coefficient text, monomial text); an empty monomial means a constant.
class TermWriter {
 public:
  void add(const std::string& coeff, const std::string& monomial);
  std::string str() const { return terms_.empty() ? "0" : out_; }

 private:
  std::string out_;
  std::vector<std::string> terms_;
};

// True for "12", "-12", "3/4", "-3/4".
bool is_plain_number(const std::string& s);

}  // namespace spanbound
