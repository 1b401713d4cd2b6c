#include <cstdio>
int main() { std::puts("zising: subcommands arrive with the full build"); return 0; }
