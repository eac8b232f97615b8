// Prints the stable dimension grid for r <= 8 tensor factors in degree 2m,
// m <= 6, together with the partition data feeding one of the entries.

#include "oinv/dimension.hpp"

#include <iostream>

int main() {
    std::cout << oinv::format_dimension_table(oinv::dimension_table(8, 6)) << "\n";

    std::cout << "breakdown of the r=3, m=2 entry (sum of N(lambda)^3 / z_lambda):\n";
    for (const oinv::Partition& lambda : oinv::enumerate_partitions(4)) {
        std::cout << "  lambda=" << lambda.str() << "  N=" << oinv::n_of(lambda)
                  << "  z=" << oinv::z_of(lambda) << "\n";
    }
    std::cout << "  total: " << oinv::stable_dimension(3, 2) << "\n";
    return 0;
}
