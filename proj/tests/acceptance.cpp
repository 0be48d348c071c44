#include <cstdio>

int main() {
    std::puts("acceptance suite not yet written");
    return 1;
}
