// Multiply generator images, check a relation, and specialize a product.

#include <iostream>

#include <shufgebra.hpp>

int main()
{
    using namespace shufgebra;
    const RationalField q;

    // x[1,1]^1 and x[2,1]^0 in the rank-3 shuffle algebra.
    auto e11 = psi_generator(3, 1, 1, q);
    auto e20 = psi_generator(3, 2, 0, q);

    auto prod = e11 * e20;
    std::cout << "e(1,1) * e(2,0) = " << to_string(prod.numerator()) << '\n';
    std::cout << "[e(1,1), e(2,0)] = " << to_string(bracket(e11, e20).numerator()) << '\n';

    auto d = parse_kostant_partition("{[1,1]:1, [2,2]:1}", 3);
    std::cout << "phi_d = " << to_string(phi(d, prod)) << '\n';

    // The p-th power of a generator image vanishes over F_3.
    const PrimeField f3(3);
    auto cube = shuffle_power(psi_generator(3, 1, 2, f3), 3);
    std::cout << "e(1,2)^3 over F_3 is " << (cube.is_zero() ? "zero" : to_string(cube.numerator())) << '\n';

    auto rep = verify_relations(3, q, 1);
    std::cout << "relations up to r = 1: " << rep.count(Status::Pass) << " passed, " << rep.count(Status::Fail)
              << " failed\n";
    return rep.passed() ? 0 : 1;
}
