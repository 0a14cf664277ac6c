#include <iostream>

#include "twomon/dsl.hpp"
#include "twomon/fixtures.hpp"

using namespace twomon;

int main() {
  dsl::Document d;
  for (const auto& [name, k] : fixtures::base_fixtures()) d.declarations.push_back(dsl::twocat_declaration(name, *k));
  d.declarations.push_back(dsl::twocat_declaration("K_REFLECT", *fixtures::k_reflect()));
  for (const auto& s : fixtures::shape_names())
    d.declarations.push_back(dsl::twocat_declaration("shape_" + s, *fixtures::shape(s)));
  std::cout << "# Fixture 2-categories written out as explicit tables.\n\n" << dsl::print(d);
}
