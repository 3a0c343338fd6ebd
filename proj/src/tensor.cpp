#include "hlts/tensor.hpp"

namespace hlts {

void TensorK::check_key(const std::vector<int>& args, int out) const {
  require(static_cast<int>(args.size()) == arity(), "tensor entry arity mismatch");
  for (int j = 0; j < arity(); ++j)
    require(args[static_cast<size_t>(j)] >= 0 && args[static_cast<size_t>(j)] < arg_dims_[static_cast<size_t>(j)],
            "tensor entry index out of range");
  require(out >= 0 && out < out_dim_, "tensor output index out of range");
}

void TensorK::set(std::vector<int> args, int out, Rat value) {
  check_key(args, out);
  args.push_back(out);
  if (value == 0)
    entries_.erase(args);
  else
    entries_[std::move(args)] = std::move(value);
}

void TensorK::add(std::vector<int> args, int out, const Rat& value) {
  if (value == 0) return;
  check_key(args, out);
  args.push_back(out);
  auto it = entries_.find(args);
  if (it == entries_.end()) {
    entries_.emplace(std::move(args), value);
  } else {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Rat TensorK::coeff(const std::vector<int>& args, int out) const {
  std::vector<int> key = args;
  key.push_back(out);
  auto it = entries_.find(key);
  return it == entries_.end() ? Rat(0) : it->second;
}

QVec TensorK::slice(const std::vector<int>& args) const {
  QVec out = zero_vec(out_dim_);
  std::vector<int> key = args;
  key.push_back(0);
  auto it = entries_.lower_bound(key);
  for (; it != entries_.end(); ++it) {
    bool same = true;
    for (int j = 0; j < arity(); ++j)
      if (it->first[static_cast<size_t>(j)] != args[static_cast<size_t>(j)]) {
        same = false;
        break;
      }
    if (!same) break;
    out[static_cast<size_t>(it->first.back())] = it->second;
  }
  return out;
}

TensorK TensorK::operator+(const TensorK& o) const {
  TensorK out = *this;
  for (const auto& [key, c] : o.entries_) {
    std::vector<int> args(key.begin(), key.end() - 1);
    out.add(args, key.back(), c);
  }
  return out;
}

TensorK TensorK::operator-(const TensorK& o) const { return *this + o.scaled(Rat(-1)); }

TensorK TensorK::scaled(const Rat& c) const {
  TensorK out(arg_dims_, out_dim_);
  if (c == 0) return out;
  for (const auto& [key, v] : entries_) out.entries_[key] = v * c;
  return out;
}

std::vector<std::vector<int>> TensorK::tuples(const std::vector<int>& dims) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dims.size(), 0);
  for (int d : dims)
    if (d <= 0) return out;
  while (true) {
    out.push_back(cur);
    int p = static_cast<int>(dims.size()) - 1;
    while (p >= 0) {
      if (++cur[static_cast<size_t>(p)] < dims[static_cast<size_t>(p)]) break;
      cur[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

QVec tensor_to_vec(const TensorK& t) {
  size_t n = static_cast<size_t>(t.out_dim());
  for (int d : t.arg_dims()) n *= static_cast<size_t>(d);
  QVec v = zero_vec(static_cast<int>(n));
  for (const auto& [key, c] : t.entries()) {
    size_t idx = 0;
    for (int j = 0; j < t.arity(); ++j)
      idx = idx * static_cast<size_t>(t.arg_dims()[static_cast<size_t>(j)]) + static_cast<size_t>(key[static_cast<size_t>(j)]);
    idx = idx * static_cast<size_t>(t.out_dim()) + static_cast<size_t>(key.back());
    v[idx] = c;
  }
  return v;
}

TensorK vec_to_tensor(const QVec& v, std::vector<int> arg_dims, int out_dim) {
  TensorK t(arg_dims, out_dim);
  size_t idx = 0;
  for (const auto& tuple : TensorK::tuples(arg_dims))
    for (int l = 0; l < out_dim; ++l, ++idx)
      if (v[idx] != 0) t.set(tuple, l, v[idx]);
  return t;
}

}  // namespace hlts
