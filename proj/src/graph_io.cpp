#include <recolour/graph_io.hpp>
#include <recolour/errors.hpp>

#include <charconv>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace recolour
{
    namespace
    {
        auto tokens(const std::string & line) -> std::vector<std::string>
        {
            std::vector<std::string> result;
            std::istringstream s(line);
            std::string t;
            while (s >> t)
                result.push_back(t);
            return result;
        }

        auto to_int(const std::string & s, int line) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw GraphFormatError(line, "expected an integer, got '" + s + "'");
            return value;
        }
    }

    auto read_graph(std::istream & in) -> Graph
    {
        std::optional<Graph> g;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            auto t = tokens(line);
            if (t.empty() || t[0] == "c")
                continue;

            if (t[0] == "p") {
                if (g)
                    throw GraphFormatError(line_no, "second 'p' line");
                if (t.size() != 2)
                    throw GraphFormatError(line_no, "expected 'p <n>'");
                int n = to_int(t[1], line_no);
                if (n < 0)
                    throw GraphFormatError(line_no, "negative vertex count");
                try {
                    g.emplace(n);
                }
                catch (const std::invalid_argument & e) {
                    throw GraphFormatError(line_no, e.what());
                }
            }
            else if (t[0] == "e") {
                if (! g)
                    throw GraphFormatError(line_no, "'e' line before 'p' line");
                if (t.size() != 3)
                    throw GraphFormatError(line_no, "expected 'e <u> <v>'");
                int u = to_int(t[1], line_no), v = to_int(t[2], line_no);
                if (u < 0 || v < 0 || u >= g->size() || v >= g->size())
                    throw GraphFormatError(line_no, "vertex out of range");
                if (g->adjacent(u, v))
                    throw GraphFormatError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
                g->add_edge(u, v);
            }
            else
                throw GraphFormatError(line_no, "unknown line type '" + t[0] + "'");
        }
        if (! g)
            throw GraphFormatError(line_no, "missing 'p' line");
        return std::move(*g);
    }

    auto parse_graph(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        return read_graph(in);
    }

    auto read_graph_file(const std::string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw std::runtime_error("cannot open graph file '" + path + "'");
        return read_graph(in);
    }

    void write_graph(std::ostream & out, const Graph & g)
    {
        if (! g.name().empty())
            out << "c " << g.name() << "\n";
        out << "p " << g.size() << "\n";
        for (auto [u, v] : g.edges())
            out << "e " << u << " " << v << "\n";
    }

    auto format_graph(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    auto format_image(std::span<const int> image) -> std::string
    {
        std::string result;
        for (std::size_t i = 0 ; i < image.size() ; ++i) {
            if (i)
                result += ',';
            result += std::to_string(image[i]);
        }
        return result;
    }

    auto format_hom(const Hom & f) -> std::string
    {
        return format_image(f.image);
    }

    auto parse_image(std::string_view text) -> std::vector<int>
    {
        std::vector<int> result;
        if (text.empty())
            return result;
        std::size_t start = 0;
        while (true) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            while (! piece.empty() && piece.front() == ' ')
                piece.remove_prefix(1);
            while (! piece.empty() && piece.back() == ' ')
                piece.remove_suffix(1);
            while (! piece.empty() && piece.front() == ' ')
                piece.remove_prefix(1);
            while (! piece.empty() && piece.back() == ' ')
                piece.remove_suffix(1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
                throw std::invalid_argument("bad colour '" + std::string(piece) + "' in colour list");
            result.push_back(value);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        return result;
    }

    auto parse_hom(std::string_view text, int target_n) -> Hom
    {
        Hom f{target_n, parse_image(text)};
        for (int c : f.image)
            if (c < 0 || c >= target_n)
                throw std::invalid_argument("colour " + std::to_string(c) + " out of range for a target on " + std::to_string(target_n) + " vertices");
        return f;
    }
}
