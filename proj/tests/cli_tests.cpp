// Placeholder; filled in once the CLI builds.
#include <iostream>

int main() {
    std::cout << "cli tests pending\n";
    return 1;
}
