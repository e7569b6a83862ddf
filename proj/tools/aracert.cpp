#include "aracert/cli.hpp"

int main(int argc, char** argv) {
  return aracert::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
