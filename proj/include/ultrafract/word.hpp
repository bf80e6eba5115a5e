#pragma once

#include <string>
#include <vector>

namespace ufract {

// A finite word over map indices; w = (w0, ..., wk-1) denotes the composition
// f_{w0} o ... o f_{wk-1} (leftmost letter outermost).
struct AddressWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(letters[i]);
    }
    return s.empty() ? "id" : s;
  }

  friend bool operator==(const AddressWord&, const AddressWord&) = default;
};

}  // namespace ufract
