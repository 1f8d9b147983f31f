#include "hpcsched/trace.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hpcsched/rng.hpp"

namespace hpcsched {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool parse_double(const std::string& field, double& out) {
    if (field.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(field.c_str(), &end);
    return errno == 0 && end == field.c_str() + field.size();
}

bool parse_int(const std::string& field, std::int64_t& out) {
    if (field.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtoll(field.c_str(), &end, 10);
    return errno == 0 && end == field.c_str() + field.size();
}

}  // namespace

std::vector<std::string> validate(const TraceConfig& config) {
    std::vector<std::string> errors;
    if (config.slots <= 0)
        errors.push_back("slots must be positive, got " + std::to_string(config.slots));
    double sum = 0.0;
    for (double p : config.availability_probs) {
        if (!(p >= 0.0)) errors.push_back("availability probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        errors.push_back("availability probabilities must sum to 1, got " + format_double(sum));
    if (!(config.price_min >= 0.0))
        errors.push_back("price_min must be nonnegative, got " + format_double(config.price_min));
    if (!(config.price_min <= config.price_max))
        errors.push_back("price_min must not exceed price_max");
    if (!(config.arrival_prob >= 0.0 && config.arrival_prob <= 1.0))
        errors.push_back("arrival_prob must lie in [0,1], got " + format_double(config.arrival_prob));
    if (!(config.reduced_fraction > 0.0 && config.reduced_fraction < 1.0))
        errors.push_back("reduced_fraction must lie strictly between 0 and 1, got " +
                         format_double(config.reduced_fraction));
    return errors;
}

std::vector<SlotInput> generate(const TraceConfig& config) {
    Xoshiro256PlusPlus rng(config.seed);
    std::vector<SlotInput> trace;
    trace.reserve(static_cast<std::size_t>(config.slots));
    const double span = config.price_max - config.price_min;
    for (std::int64_t t = 0; t < config.slots; ++t) {
        const double u_avail = rng.uniform();
        const double u_price = rng.uniform();
        const double u_arrival = rng.uniform();
        SlotInput s;
        s.slot = t;
        if (u_avail < config.availability_probs[0])
            s.availability = 0;
        else if (u_avail < config.availability_probs[0] + config.availability_probs[1])
            s.availability = 1;
        else
            s.availability = 2;
        s.full_price = config.price_min + u_price * span;
        s.reduced_price = config.reduced_fraction * s.full_price;
        s.arrival = u_arrival < config.arrival_prob ? 1 : 0;
        trace.push_back(s);
    }
    return trace;
}

void write_trace(std::span<const SlotInput> trace, double reduced_fraction,
                 const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "# alpha=" << format_double(reduced_fraction) << "\n";
    out << "t,h,cf,cr,arrival\n";
    for (const SlotInput& s : trace) {
        out << s.slot << ',' << s.availability << ',' << format_double(s.full_price) << ','
            << format_double(s.reduced_price) << ',' << s.arrival << "\n";
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

TraceFile read_trace(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) fail(path, 1, "empty file");
    ++line_no;
    constexpr std::string_view kHeader = "# alpha=";
    if (line.rfind(kHeader, 0) != 0) fail(path, line_no, "expected '# alpha=<value>' header");
    TraceFile file;
    if (!parse_double(line.substr(kHeader.size()), file.reduced_fraction) ||
        !(file.reduced_fraction > 0.0 && file.reduced_fraction < 1.0))
        fail(path, line_no, "alpha must be a real strictly between 0 and 1");

    if (!std::getline(in, line)) fail(path, 2, "missing column header");
    ++line_no;
    if (line != "t,h,cf,cr,arrival") fail(path, line_no, "expected column header 't,h,cf,cr,arrival'");

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::array<std::string, 5> fields;
        std::size_t n = 0;
        std::stringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) {
            if (n == 5) fail(path, line_no, "too many columns");
            fields[n++] = field;
        }
        if (n != 5) fail(path, line_no, "expected 5 columns, got " + std::to_string(n));

        SlotInput s;
        std::int64_t h = 0, arrival = 0;
        if (!parse_int(fields[0], s.slot)) fail(path, line_no, "bad slot index '" + fields[0] + "'");
        if (!parse_int(fields[1], h)) fail(path, line_no, "bad availability '" + fields[1] + "'");
        if (!parse_double(fields[2], s.full_price)) fail(path, line_no, "bad price '" + fields[2] + "'");
        if (!parse_double(fields[3], s.reduced_price))
            fail(path, line_no, "bad reduced price '" + fields[3] + "'");
        if (!parse_int(fields[4], arrival)) fail(path, line_no, "bad arrival '" + fields[4] + "'");
        s.availability = static_cast<int>(h);
        s.arrival = static_cast<int>(arrival);
        if (auto err = check_slot_input(s, file.reduced_fraction)) fail(path, line_no, *err);
        file.slots.push_back(s);
    }
    return file;
}

}  // namespace hpcsched
