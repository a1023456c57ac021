#include "sturmian/catalog.hpp"

namespace sturmian {

AdmissibleSequence figure1_sequence(int k_max)
{
    AdmissibleSequence s;
    s.d = 3;
    s.alpha = "AAB";
    s.i = {{1, 2, 2}, {1}, {1, 1}};
    for (int k = 3; k <= k_max; ++k) {
        s.alpha += 'B';
        s.i.push_back(k % 2 == 1 ? std::vector<int>{1, 1} : std::vector<int>{1});
    }
    s.alpha.resize(std::max(k_max + 1, 0));
    s.i.resize(s.alpha.size());
    s.tail = "ray";
    return s;
}

AdmissibleSequence fibonacci_sequence(int k_max)
{
    AdmissibleSequence s;
    s.d = 6;
    s.alpha = "A";
    s.i = {{2, 4, 6}};
    const int cycle[3] = {3, 1, 2};
    for (int k = 1; k <= k_max; ++k) {
        s.alpha += k % 2 == 1 ? 'B' : 'A';
        s.i.push_back({cycle[(k - 1) % 3]});
    }
    return s;
}

Graph cyclic_ray(int kind, int length)
{
    if (kind != 1 && kind != 2)
        throw Error(Errc::InvalidArgument, "cyclic ray kind must be 1 or 2");
    Graph g;
    g.degree = 3;
    g.trunc_right = true;
    g.vertices.push_back(Vertex{0, kind == 1 ? 'b' : 'a', 0});
    for (int j = 1; j < length; ++j) {
        if (kind == 1) {
            int p = (j - 1) % 3;
            g.vertices.push_back(Vertex{j, p == 2 ? 'b' : 'a', 0});
            g.edges.push_back(Edge{j - 1, j, j == 1 ? 3 : 2, 1});
        } else {
            int p = (j - 1) % 4;
            g.vertices.push_back(Vertex{j, p == 1 ? 'b' : 'a', p == 0 ? 1 : 0});
            g.edges.push_back(Edge{j - 1, j, j == 1 ? 3 : (p == 1 ? 1 : 2), 1});
        }
    }
    return g;
}

} // namespace sturmian
