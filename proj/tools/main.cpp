#include "prur/app.hpp"

int main(int argc, char** argv) { return prur::run(argc, argv); }
