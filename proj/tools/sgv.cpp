#include <iostream>

int main() {
    std::cout << "sgv placeholder\n";
    return 0;
}
