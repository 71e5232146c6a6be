// Prints tau(w, q) and the (q-1)^r quotients for the minimal elements of every elliptic class.
// Usage: demo_elliptic_traces [TYPE...]   (default: A2 B2 G2 B3 D4)
#include <iostream>
#include <string>
#include <vector>

#include "hecketrace.hpp"

using namespace hecketrace;

int main(int argc, char** argv) {
  std::vector<std::string> types(argv + 1, argv + argc);
  if (types.empty()) types = {"A2", "B2", "G2", "B3", "D4"};
  try {
    for (const auto& type : types) {
      auto ctx = HeckeContext::create(type);
      const CartanDatum& d = ctx->datum();
      std::cout << d.type_spec() << "  |W| = " << d.order() << "\n";
      for (const ConjClass& c : d.classes()) {
        if (!c.is_elliptic) continue;
        const ElementId w = c.minimal_elements.front();
        const EllipticQuotients eq = elliptic_quotients(*ctx, w);
        std::cout << "  w = " << word_to_string(d.reduced_word(w)) << "  (" << c.members.size() << " in class, "
                  << c.minimal_elements.size() << " minimal)\n"
                  << "    tau          = " << ctx->traces().get(w).tau_q.to_string() << "\n"
                  << "    tau/(q-1)^r  = " << eq.underline_tau.to_string() << "\n"
                  << "    R_1w/(q-1)^r = " << eq.underline_r1.to_string() << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
