// Regenerates the shipped example files into a directory.
#include <filesystem>
#include <iostream>

#include "sturmian/catalog.hpp"

using namespace sturmian;

namespace {

constexpr int kFigure1Depth = 20;     // 50 vertices, complete levels up to 17
constexpr int kFibonacciDepth = 11;   // 234 vertices, complete levels up to 14
constexpr int kFibonacciEntries = 13;
constexpr int kRayLength = 60;

void put(const std::filesystem::path& dir, const std::string& name, const std::string& header, const std::string& body)
{
    write_file_atomic((dir / name).string(), header + body);
}

std::string comment(const std::string& text)
{
    return "# " + text + "\n";
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_corpus <output-dir>\n";
        return 1;
    }
    const std::filesystem::path dir = argv[1];
    try {
        std::filesystem::create_directories(dir);

        const AdmissibleSequence fig = figure1_sequence(kFigure1Depth);
        put(dir, "figure1_seq.json", "", sequence_to_json(fig) + "\n");
        put(dir, "figure1.eig",
            comment("d = 3, synthesized prefix of depth " + std::to_string(kFigure1Depth) + " (figure1_seq.json)"),
            serialize_eig(build_prefix(fig, kFigure1Depth).graph));

        const AdmissibleSequence fib = fibonacci_sequence(kFibonacciEntries);
        put(dir, "fibonacci_seq.json", "", sequence_to_json(fib) + "\n");
        put(dir, "fibonacci_d6.eig",
            comment("d = 6, synthesized prefix of depth " + std::to_string(kFibonacciDepth) + " (fibonacci_seq.json)"),
            serialize_eig(build_prefix(fib, kFibonacciDepth).graph));

        put(dir, "cyclic1.eig", comment("d = 3, periodic ray (a, a, b) with indices 2/1; G_1 has a cycle"),
            serialize_eig(cyclic_ray(1, kRayLength)));
        put(dir, "cyclic2.eig", comment("d = 3, periodic ray (a+loop, b, a, a); G_2 has a cycle"),
            serialize_eig(cyclic_ray(2, kRayLength)));

        Graph mono;
        mono.degree = 3;
        mono.vertices.push_back(Vertex{0, 'a', 3});
        put(dir, "monochrome.eig", comment("constant coloring: one ball class at every radius"), serialize_eig(mono));
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
