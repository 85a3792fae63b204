#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diamond/draw.hpp"
#include "diamond/embed.hpp"
#include "diamond/generators.hpp"
#include "diamond/json_io.hpp"

using nlohmann::json;

namespace {

struct GraphInput {
    std::string named;
    std::string file;

    diamond::Graph load() const {
        if (!named.empty()) return diamond::generate_named(named);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            return diamond::parse_edge_list(in);
        }
        return diamond::parse_edge_list(std::cin);
    }
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    auto* named = cmd->add_option(
        "--named", in.named,
        "named fixture: desargues, q3, k23, c4, c6, p_<len>, cycle_<len>");
    auto* file = cmd->add_option("--file", in.file, "edge-list file (default: stdin)");
    named->excludes(file);
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

int verdict_no(const diamond::Certificate& cert) {
    std::cout << diamond::certificate_to_json(cert).dump(2) << "\n";
    return 1;
}

int cmd_recognize(const GraphInput& in) {
    auto g = in.load();
    auto verdict = diamond::is_partial_cube(g);
    if (!verdict.is_partial_cube) {
        json out{{"partial_cube", false},
                 {"certificate", diamond::certificate_to_json(verdict.certificate)}};
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    json out{{"partial_cube", true}, {"class_count", verdict.labeling.bits_per_vertex}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_classes(const GraphInput& in) {
    auto g = in.load();
    auto a = diamond::analyze(g);
    if (a.certificate.reason == diamond::Certificate::Reason::disconnected ||
        a.certificate.reason == diamond::Certificate::Reason::odd_cycle)
        return verdict_no(a.certificate);
    std::cout << diamond::classes_to_json(g, a.classes).dump(2) << "\n";
    return 0;
}

int cmd_coherence(const GraphInput& in) {
    auto g = in.load();
    auto a = diamond::analyze(g);
    if (!a.embeddable) return verdict_no(a.certificate);
    std::cout << diamond::cuts_to_json(a.cuts).dump(2) << "\n";
    return 0;
}

int cmd_dimension(const GraphInput& in) {
    auto g = in.load();
    auto a = diamond::analyze(g);
    if (!a.embeddable) return verdict_no(a.certificate);
    int dim = g.n <= 1 ? 0 : a.width - 1;
    json out{{"dimension", dim},
             {"width", a.width},
             {"class_count", a.classes.size()}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_embed(const GraphInput& in, bool direct, const std::string& out_path) {
    auto g = in.load();
    auto e = direct ? diamond::embed_direct(g) : diamond::embed_minimum(g);
    write_output(out_path, diamond::embedding_to_json(e).dump(2) + "\n");
    return 0;
}

int cmd_verify(const GraphInput& in, const std::string& embedding_path) {
    auto g = in.load();
    std::ifstream f(embedding_path);
    if (!f) throw std::runtime_error("cannot open " + embedding_path);
    auto e = diamond::embedding_from_json(json::parse(f));
    auto res = diamond::verify_embedding(g, e);
    std::cout << diamond::verify_to_json(res).dump(2) << "\n";
    return res.ok ? 0 : 1;
}

int cmd_generate(const std::vector<int>& diamond_kr, const std::string& named,
                 long long max_vertices, const std::string& out_path,
                 const std::string& coords_out) {
    if (!named.empty()) {
        write_output(out_path, diamond::serialize_edge_list(diamond::generate_named(named)));
        return 0;
    }
    auto patch = diamond::generate_diamond_patch(diamond_kr[0], diamond_kr[1], max_vertices);
    write_output(out_path, diamond::serialize_edge_list(patch.graph));
    if (!coords_out.empty()) {
        diamond::DiamondEmbedding own{patch.k, patch.coords};
        write_output(coords_out, diamond::embedding_to_json(own).dump(2) + "\n");
    }
    return 0;
}

int cmd_draw(const GraphInput& in, const std::string& embedding_path,
             const diamond::DrawingConfig& cfg, const std::string& out_path) {
    auto g = in.load();
    diamond::DiamondEmbedding e;
    if (!embedding_path.empty()) {
        std::ifstream f(embedding_path);
        if (!f) throw std::runtime_error("cannot open " + embedding_path);
        e = diamond::embedding_from_json(json::parse(f));
    } else {
        e = diamond::embed_minimum(g);
    }
    if (e.dimension < 2) e = diamond::pad_embedding(e, 2);
    write_output(out_path, diamond::emit_svg(g, e, cfg));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isometric embeddings into hexagonal tilings, the diamond lattice, "
                 "and their higher-dimensional analogues"};
    app.require_subcommand(1);

    GraphInput input;

    auto* recognize = app.add_subcommand("recognize", "decide whether the graph is a partial cube");
    add_graph_options(recognize, input);

    auto* classes = app.add_subcommand("classes", "list the Djokovic-Winkler edge classes");
    add_graph_options(classes, input);

    auto* coherence = app.add_subcommand("coherence",
                                         "list the oriented cuts, or the incoherence certificate");
    add_graph_options(coherence, input);

    auto* dimension = app.add_subcommand("dimension",
                                         "compute the diamond dimension and cut-poset width");
    add_graph_options(dimension, input);

    auto* embed = app.add_subcommand("embed", "compute an integer embedding");
    add_graph_options(embed, input);
    bool direct = false, minimum = false;
    std::string embed_out;
    auto* direct_flag = embed->add_flag("--direct", direct, "one coordinate per class");
    auto* minimum_flag = embed->add_flag("--minimum", minimum, "minimum dimension (default)");
    direct_flag->excludes(minimum_flag);
    embed->add_option("--out", embed_out, "write the embedding JSON to a file");

    auto* verify = app.add_subcommand("verify", "check an embedding against the graph metric");
    add_graph_options(verify, input);
    std::string verify_embedding_path;
    verify->add_option("--embedding", verify_embedding_path, "embedding JSON file")->required();

    auto* generate = app.add_subcommand("generate",
                                        "emit a fixture or diamond patch as an edge list");
    std::vector<int> diamond_kr;
    std::string generate_named_name, generate_out, coords_out;
    long long max_vertices = diamond::kDefaultPatchCap;
    auto* diamond_opt = generate->add_option("--diamond", diamond_kr,
                                             "dimension k and radius r of a patch")
                            ->expected(2);
    auto* named_opt = generate->add_option("--named", generate_named_name, "named fixture");
    diamond_opt->excludes(named_opt);
    generate->add_option("--max-vertices", max_vertices, "patch size cap");
    generate->add_option("--out", generate_out, "write the edge list to a file");
    generate->add_option("--coords-out", coords_out,
                         "write the patch's own coordinates as embedding JSON");

    auto* draw = app.add_subcommand("draw", "render a dimension-2 embedding as SVG");
    add_graph_options(draw, input);
    std::string draw_embedding_path, draw_out;
    diamond::DrawingConfig cfg;
    draw->add_option("--embedding", draw_embedding_path,
                     "embedding JSON file (default: embed --minimum)");
    draw->add_option("--scale", cfg.scale, "pixels per unit length");
    draw->add_option("--margin", cfg.margin, "margin in pixels");
    draw->add_option("--vertex-radius", cfg.vertex_radius, "vertex dot radius in pixels");
    draw->add_option("--out", draw_out, "write the SVG to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(input);
        if (classes->parsed()) return cmd_classes(input);
        if (coherence->parsed()) return cmd_coherence(input);
        if (dimension->parsed()) return cmd_dimension(input);
        if (embed->parsed()) return cmd_embed(input, direct, embed_out);
        if (verify->parsed()) return cmd_verify(input, verify_embedding_path);
        if (generate->parsed()) {
            if (diamond_kr.empty() && generate_named_name.empty())
                throw std::invalid_argument("generate needs --diamond or --named");
            return cmd_generate(diamond_kr, generate_named_name, max_vertices,
                                generate_out, coords_out);
        }
        if (draw->parsed()) return cmd_draw(input, draw_embedding_path, cfg, draw_out);
    } catch (const diamond::NotDiamondEmbeddable& e) {
        return verdict_no(e.certificate);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
