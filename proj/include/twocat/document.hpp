#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twocat/bimodule.hpp"
#include "twocat/ideal.hpp"
#include "twocat/quiver.hpp"

namespace twocat {

// Raised for malformed quiver documents. `where` is "line:column" for syntax
// errors and a JSON pointer such as "/arrows/1/source" otherwise.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string origin, std::string where, const std::string& message)
      : std::runtime_error(origin + ":" + where + ": " + message), origin_(std::move(origin)), where_(std::move(where)) {}
  const std::string& origin() const { return origin_; }
  const std::string& where() const { return where_; }

 private:
  std::string origin_, where_;
};

struct NamedIdeal {
  std::string name;
  std::vector<std::string> given;  // descriptors as written
  Ideal ideal;                     // minimalized
};

// {"vertices": [...], "arrows": [{"id", "source", "target"}], "tree": bool,
//  "ideals": {"name": [descriptors]}}; "ideals" is optional.
struct QuiverDocument {
  Quiver quiver;
  AlgebraPtr algebra;  // set for trees
  std::vector<NamedIdeal> ideals;
  std::vector<std::string> warnings;  // named ideals that were not minimal
};

QuiverDocument parse_quiver_document(const std::string& text, const std::string& origin = "<input>");
QuiverDocument load_quiver_document(const std::string& path);

// Inverse of parse_quiver_document, named ideals written in canonical form.
std::string quiver_document_json(const QuiverDocument& doc);

// Quiver, basis labels with their vertex grades, and one dense matrix per
// arrow for each side; entries are "p/q" strings, columns are images.
std::string bimodule_json(const Bimodule<Rational>& m);

}  // namespace twocat
