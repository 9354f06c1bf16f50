#include "dgvertex/dgvertex.hpp"
int main() { return 0; }
