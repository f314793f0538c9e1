#include <iostream>

#include "coupon_cli/app.hpp"

int main(int argc, char** argv) {
  return coupon::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
