#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <stdexcept>

#include "common.hpp"
#include "trop/io.hpp"
#include "trop/puiseux.hpp"

namespace tropcli {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) {
        size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw Failure{2, "not a number: '" + tok + "'"};
        }
        if (pos != tok.size()) throw Failure{2, "not a number: '" + tok + "'"};
        out.push_back(v);
    }
    return out;
}

std::pair<int, int> parse_grid(const std::string& s) {
    const auto xs = split(s, 'x');
    if (xs.size() != 2) throw Failure{2, "grid must look like 96x64"};
    try {
        const int a = std::stoi(xs[0]);
        const int b = std::stoi(xs[1]);
        if (a < 1 || b < 1) throw Failure{2, "grid must be at least 1x1"};
        return {a, b};
    } catch (const Failure&) {
        throw;
    } catch (const std::exception&) {
        throw Failure{2, "grid must look like 96x64"};
    }
}

trop::OrthantSign parse_orthant(const std::string& s) {
    trop::OrthantSign out;
    for (const auto& tok : split(s, ',')) {
        if (tok == "+") {
            out.push_back(1);
        } else if (tok == "-") {
            out.push_back(-1);
        } else {
            throw Failure{2, "orthant entries must be + or -"};
        }
    }
    return out;
}

std::pair<double, double> parse_window(const std::string& s) {
    const auto v = parse_double_list(s);
    if (v.size() != 2 || !(v[0] < v[1])) throw Failure{2, "window must be min,max with min < max"};
    return {v[0], v[1]};
}

std::string resolve_out(const std::string& path) {
    if (path.empty() || std::filesystem::path(path).is_absolute()) return path;
    const char* dir = std::getenv("TROP_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Failure{2, "cannot create output directory '" + std::string(dir) + "'"};
    return (std::filesystem::path(dir) / path).string();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        trop::write_text_file(resolve_out(path), content);
    }
}

}  // namespace tropcli

int main(int argc, char** argv) {
    CLI::App app{"tropical geometry toolkit: dequantization, amoebas, polyhedral loci"};
    // --h is a real option on some subcommands, so help is long-form only
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    tropcli::setup_eval(app);
    tropcli::setup_amoeba(app);
    tropcli::setup_deform(app);
    tropcli::setup_newton(app);
    tropcli::setup_markov(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e);
        return c == 0 ? 0 : 2;
    } catch (const tropcli::Failure& f) {
        std::cerr << f.msg << "\n";
        return f.code;
    } catch (const trop::PrecisionError& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
