#ifndef ODDWALK_RNG_HH
#define ODDWALK_RNG_HH 1

#include <cmath>
#include <cstdint>

namespace oddwalk
{
    /**
     * SplitMix64: a counter (advanced by the golden-ratio increment) passed
     * through a fixed 64-bit finaliser. Output depends only on the seed and
     * the number of draws, on every platform.
     */
    class SplitMix64
    {
        public:
            using result_type = std::uint64_t;

            explicit SplitMix64(std::uint64_t seed = 0) : counter_(seed) {}

            static constexpr result_type min() { return 0; }
            static constexpr result_type max() { return ~result_type{0}; }

            result_type operator()()
            {
                std::uint64_t z = (counter_ += 0x9E3779B97F4A7C15ULL);
                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
                z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
                return z ^ (z >> 31);
            }

            // Uniform on [0, 1) with 53 bits.
            double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

            // Uniform on [0, bound).
            std::uint64_t below(std::uint64_t bound)
            {
                // Lemire-free rejection keeps the stream simple to reason about.
                const std::uint64_t limit = max() - max() % bound;
                std::uint64_t x;
                do
                    x = (*this)();
                while (x >= limit);
                return x % bound;
            }

            // Marsaglia polar method; the spare variate is kept.
            double gaussian()
            {
                if (has_spare_) {
                    has_spare_ = false;
                    return spare_;
                }
                double u, v, s;
                do {
                    u = 2.0 * uniform() - 1.0;
                    v = 2.0 * uniform() - 1.0;
                    s = u * u + v * v;
                } while (s >= 1.0 || s == 0.0);
                const double m = std::sqrt(-2.0 * std::log(s) / s);
                spare_ = v * m;
                has_spare_ = true;
                return u * m;
            }

        private:
            std::uint64_t counter_;
            double spare_ = 0.0;
            bool has_spare_ = false;
    };
}

#endif
