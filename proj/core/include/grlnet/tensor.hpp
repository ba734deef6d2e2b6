#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace grlnet {

/// Dense n-dimensional array of doubles, row-major, value semantics.
/// product(shape) == data.size() always holds.
class Tensor {
public:
    Tensor() = default;
    /// Zero-filled tensor of the given shape.
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    static Tensor full(std::vector<std::size_t> shape, double value);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t extent(std::size_t axis) const { return shape_[axis]; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& operator()(std::size_t i, std::size_t j) {
        return data_[i * shape_[1] + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * shape_[1] + j];
    }
    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * shape_[1] + j) * shape_[2] + k];
    }
    double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[((i * shape_[1] + j) * shape_[2] + k) * shape_[3] + l];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
    bool all_finite() const;

    /// Shape with the same data; product must match.
    Tensor reshaped(std::vector<std::size_t> shape) const;

    std::string shape_str() const;
    static std::string shape_str(const std::vector<std::size_t>& shape);

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

/// Standard matrix product of a[m x k] and b[k x n].
Tensor matmul(const Tensor& a, const Tensor& b);

/// Valid (no padding) stride-1 correlation of one sample.
/// input[c_in x h x w], kernels[c_out x c_in x kh x kw], bias[c_out]
/// -> out[c_out x (h-kh+1) x (w-kw+1)].
Tensor conv2d(const Tensor& input, const Tensor& kernels, const Tensor& bias);

struct PoolResult {
    Tensor output;
    /// Flat index into the input of each output cell's winning element,
    /// row-major over the output. Ties break to the first occurrence.
    std::vector<std::size_t> argmax;
};

/// Max pooling of one sample input[c x h x w]; the window must tile the
/// input exactly ((h - wh) % sh == 0 and (w - ww) % sw == 0).
PoolResult maxpool2d(const Tensor& input, std::array<std::size_t, 2> window,
                     std::array<std::size_t, 2> stride);

} // namespace grlnet
