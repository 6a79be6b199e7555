/**
 * @file main.cpp
 * @brief Entry point of the kupinv command-line tool.
 */
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return kup::cli::run(argc, argv, std::cout, std::cerr); }
