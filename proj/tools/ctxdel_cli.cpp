#include <cstdio>

int main() {
  std::puts("ctxdel (placeholder)");
  return 0;
}
