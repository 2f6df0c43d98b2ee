#include <iostream>

#include "corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: iwb_corpus_gen DIR\n";
    return 2;
  }
  iwb::testing::write_corpus(argv[1]);
  return 0;
}
