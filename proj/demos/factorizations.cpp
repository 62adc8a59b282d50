// Lists the mutually permutable factorizations of a group and checks the h* bound on each.

#include <algorithm>
#include <iostream>
#include <string>

#include "fgh/factorization.hpp"
#include "fgh/heights.hpp"
#include "fgh/lab/corpus.hpp"
#include "fgh/quotient.hpp"

int main(int argc, char** argv) {
  const std::string name = argc > 1 ? argv[1] : "S4";
  const fgh::GroupPtr g = fgh::lab::build_group(name);
  const fgh::Height hg = fgh::generalized_fitting_height(*g);
  std::cout << name << " order " << g->order() << " h* " << hg.to_string() << '\n';

  std::size_t count = 0;
  for (const auto& rec : fgh::find_factorizations(*g, fgh::FactorizationMode::mutually)) {
    const fgh::InducedGroup a(rec.a), b(rec.b);
    const fgh::Height ha = fgh::generalized_fitting_height(a.group());
    const fgh::Height hb = fgh::generalized_fitting_height(b.group());
    const fgh::Height top = std::max(ha, hb);
    const bool bounded = top <= hg && hg <= top + fgh::Height(1);
    std::cout << "A=" << rec.a.key_string() << " |A|=" << rec.a.order() << " h*(A)=" << ha.to_string()
              << "  B=" << rec.b.key_string() << " |B|=" << rec.b.order() << " h*(B)=" << hb.to_string()
              << (rec.totally_permutable ? "  totally" : "") << (bounded ? "" : "  BOUND VIOLATED") << '\n';
    ++count;
  }
  std::cout << count << " mutually permutable factorizations\n";
}
