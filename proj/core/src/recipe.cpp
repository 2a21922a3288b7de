#include "lg/recipe.hpp"

#include <sstream>
#include <stdexcept>

namespace lg {

NetworkRecipe::NetworkRecipe(std::vector<RecipeFactor> factors) : factors_(std::move(factors)) {
  validate();
}

void NetworkRecipe::validate() const {
  if (factors_.empty()) throw std::invalid_argument("NetworkRecipe: no factors");
  std::map<char, int> mult;
  for (const auto& f : factors_) {
    if (f.name.empty()) throw std::invalid_argument("NetworkRecipe: empty factor name");
    if (f.labels.size() != 2 && f.labels.size() != 4)
      throw std::invalid_argument("NetworkRecipe: factor '" + f.name +
                                  "' must have 2 or 4 labels");
    for (char c : f.labels) ++mult[c];
  }
  for (const auto& [c, n] : mult) {
    if (c == 'x' || c == 'y') {
      if (n != 1)
        throw std::invalid_argument(std::string("NetworkRecipe: open label '") + c +
                                    "' must occur exactly once");
    } else if (n != 2) {
      throw std::invalid_argument(std::string("NetworkRecipe: label '") + c +
                                  "' must occur exactly twice, found " + std::to_string(n));
    }
  }
  if (!mult.count('x') || !mult.count('y'))
    throw std::invalid_argument("NetworkRecipe: both open labels x and y are required");
}

NetworkRecipe NetworkRecipe::parse(const std::string& text) {
  std::vector<RecipeFactor> factors;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t open = line.find('[', b);
    std::size_t close = line.find(']', b);
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw std::invalid_argument("NetworkRecipe: malformed line " + std::to_string(lineno));
    RecipeFactor f;
    f.name = line.substr(b, open - b);
    while (!f.name.empty() && (f.name.back() == ' ' || f.name.back() == '\t')) f.name.pop_back();
    std::string inner = line.substr(open + 1, close - open - 1);
    std::string label;
    std::istringstream ls(inner);
    while (std::getline(ls, label, ',')) {
      std::string trimmed;
      for (char c : label)
        if (c != ' ' && c != '\t') trimmed += c;
      if (trimmed.size() != 1)
        throw std::invalid_argument("NetworkRecipe: labels must be single characters (line " +
                                    std::to_string(lineno) + ")");
      f.labels += trimmed[0];
    }
    factors.push_back(std::move(f));
  }
  return NetworkRecipe(std::move(factors));
}

std::string NetworkRecipe::str() const {
  std::string out;
  for (const auto& f : factors_) {
    out += f.name + "[";
    for (std::size_t i = 0; i < f.labels.size(); ++i) {
      if (i) out += ",";
      out += f.labels[i];
    }
    out += "]\n";
  }
  return out;
}

}  // namespace lg
