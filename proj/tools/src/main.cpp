#include "app.hpp"

int main(int argc, char** argv) { return entropart::cli::run(argc, argv); }
