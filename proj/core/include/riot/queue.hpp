#ifndef RIOT_QUEUE_HPP
#define RIOT_QUEUE_HPP

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>

namespace riot {

/// Bounded FIFO connecting task instances. Producers block while the
/// queue is full (backpressure); `close()` unblocks everyone and turns
/// further pushes into no-ops so an aborted run can drain.
template <typename T>
class BoundedQueue {
public:
    explicit BoundedQueue(std::size_t capacity) : capacity_(capacity ? capacity : 1) {}

    BoundedQueue(const BoundedQueue&) = delete;
    BoundedQueue& operator=(const BoundedQueue&) = delete;

    /// Blocking push. Returns false if the queue was closed.
    bool push(T item) {
        std::unique_lock lock(mu_);
        notFull_.wait(lock, [&] { return closed_ || items_.size() < capacity_; });
        if (closed_) return false;
        items_.push_back(std::move(item));
        size_.store(items_.size(), std::memory_order_relaxed);
        notEmpty_.notify_one();
        return true;
    }

    /// Non-blocking push. Returns false when full or closed.
    bool tryPush(T item) {
        std::unique_lock lock(mu_);
        if (closed_ || items_.size() >= capacity_) return false;
        items_.push_back(std::move(item));
        size_.store(items_.size(), std::memory_order_relaxed);
        notEmpty_.notify_one();
        return true;
    }

    /// Blocking pop. Empty result means closed and drained.
    std::optional<T> pop() {
        std::unique_lock lock(mu_);
        notEmpty_.wait(lock, [&] { return closed_ || !items_.empty(); });
        if (items_.empty()) return std::nullopt;
        T item = std::move(items_.front());
        items_.pop_front();
        size_.store(items_.size(), std::memory_order_relaxed);
        notFull_.notify_one();
        return item;
    }

    void close() {
        std::lock_guard lock(mu_);
        closed_ = true;
        notEmpty_.notify_all();
        notFull_.notify_all();
    }

    /// Racy by design; used by the stability monitor, not for control flow.
    std::size_t sizeApprox() const { return size_.load(std::memory_order_relaxed); }

    std::size_t capacity() const { return capacity_; }

private:
    const std::size_t capacity_;
    mutable std::mutex mu_;
    std::condition_variable notEmpty_;
    std::condition_variable notFull_;
    std::deque<T> items_;
    std::atomic<std::size_t> size_{0};
    bool closed_ = false;
};

}  // namespace riot

#endif
