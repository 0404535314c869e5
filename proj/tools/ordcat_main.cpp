#include <cstdio>
int main() { std::puts("ordcat: under construction"); return 0; }
