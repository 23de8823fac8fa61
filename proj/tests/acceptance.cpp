#include "fa/oracle/verify.hpp"

#include <chrono>
#include <iostream>

using namespace fa::oracle;

int main()
{
    int failures = 0;
    for (int i = 1; i <= 11; ++i) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            Report r = acceptance_criterion(i);
            pass = r.pass();
            if (const Claim* f = r.first_failure())
                detail = " first failure " + claim_to_json(*f).dump();
            else
                detail = " (" + std::to_string(r.claims.size()) + " claims)";
        } catch (const std::exception& e) {
            detail = std::string(" error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i << ": " << (pass ? "PASS" : "FAIL") << " - " << acceptance_title(i) << detail
                  << " [" << secs << " s]\n";
        failures += !pass;
    }
    return failures == 0 ? 0 : 1;
}
