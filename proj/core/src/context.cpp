#include "supertime/context.hpp"

#include "supertime/errors.hpp"

namespace supertime {

int Context::add_generator(const std::string& name) {
    int id = static_cast<int>(gen_names_.size());
    gen_names_.push_back(name);
    gen_index_[name] = id;
    return id;
}

int Context::generator(const std::string& name) const {
    int id = find_generator(name);
    if (id < 0) throw UnknownSymbol(name);
    return id;
}

int Context::find_generator(const std::string& name) const {
    auto it = gen_index_.find(name);
    return it == gen_index_.end() ? -1 : it->second;
}

}  // namespace supertime
