#include "srg/rng.hpp"

#include <numeric>

namespace srg {

std::vector<std::size_t> random_permutation(std::size_t n, Xorshift64Star& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(order, rng);
  return order;
}

}  // namespace srg
