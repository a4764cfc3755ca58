#ifndef ODDWALK_UNION_FIND_HH
#define ODDWALK_UNION_FIND_HH 1

#include <numeric>
#include <utility>
#include <vector>

namespace oddwalk
{
    class UnionFind
    {
        public:
            explicit UnionFind(int n) : parent_(n), size_(n, 1)
            {
                std::iota(parent_.begin(), parent_.end(), 0);
            }

            int find(int x)
            {
                while (parent_[x] != x) {
                    parent_[x] = parent_[parent_[x]];
                    x = parent_[x];
                }
                return x;
            }

            bool unite(int a, int b)
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                if (size_[a] < size_[b])
                    std::swap(a, b);
                parent_[b] = a;
                size_[a] += size_[b];
                return true;
            }

            int size() const { return static_cast<int>(parent_.size()); }

            // Class ids 0..k-1 numbered by smallest member.
            std::vector<int> labels(int * count = nullptr)
            {
                std::vector<int> root_label(parent_.size(), -1), out(parent_.size());
                int next = 0;
                for (int i = 0; i < size(); ++i) {
                    int r = find(i);
                    if (root_label[r] == -1)
                        root_label[r] = next++;
                    out[i] = root_label[r];
                }
                if (count)
                    *count = next;
                return out;
            }

        private:
            std::vector<int> parent_;
            std::vector<int> size_;
    };
}

#endif
