// Twisted traces of the Coxeter element of B2, and their average over W against R_{1,w}.
#include <iostream>

#include "hecketrace.hpp"

using namespace hecketrace;

int main() {
  auto ctx = HeckeContext::create("B2");
  const CartanDatum& d = ctx->datum();
  const CharacterTable& t = ctx->characters();
  const ElementId c = d.from_word({1, 2});

  std::cout << "multiplicity of each principal-series unipotent in R^1_y, one column per class\n";
  for (std::size_t k = 0; k < t.irreps().size(); ++k) {
    std::cout << "  " << t.irreps()[k].label << ":";
    for (const ConjClass& cl : d.classes()) std::cout << " " << t.unipotent_multiplicity(k, cl.minimal_elements.front());
    std::cout << "\n";
  }

  std::cout << "\ntwisted traces of w = 12\n";
  for (const ConjClass& cl : d.classes()) {
    const ElementId y = cl.minimal_elements.front();
    std::cout << "  y = " << word_to_string(d.reduced_word(y)) << ":  tau_y = " << tau_y(t, c, y).to_string()
              << ",  det(q-y) = " << cl.char_poly.to_string() << "\n";
  }

  const TwistedTraceCheck check = verify_twisted_trace_identity(t, ctx->rpolys(), c);
  std::cout << "\nR_{1,w} (q-1)^-r            = " << check.lhs.to_string() << "\n"
            << "|W|^-1 sum_y tau_y/det(q-y) = " << check.rhs.to_string() << "\n"
            << (check.holds() ? "equal\n" : "NOT equal\n");
  return check.holds() ? 0 : 1;
}
