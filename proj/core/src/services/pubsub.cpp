#include "riot/services/pubsub.hpp"

#include <chrono>

#include "riot/errors.hpp"

namespace riot {

std::optional<std::string> Subscription::poll() {
    std::lock_guard lock(mu_);
    if (queue_.empty()) return std::nullopt;
    std::string p = std::move(queue_.front());
    queue_.pop_front();
    return p;
}

std::optional<std::string> Subscription::pollFor(std::int64_t timeoutMs) {
    std::unique_lock lock(mu_);
    ready_.wait_for(lock, std::chrono::milliseconds(timeoutMs),
                    [&] { return closed_ || !queue_.empty(); });
    if (queue_.empty()) return std::nullopt;
    std::string p = std::move(queue_.front());
    queue_.pop_front();
    return p;
}

bool Subscription::closed() const {
    std::lock_guard lock(mu_);
    return closed_;
}

std::size_t Subscription::pending() const {
    std::lock_guard lock(mu_);
    return queue_.size();
}

void Subscription::deliver(std::string payload) {
    std::lock_guard lock(mu_);
    if (closed_) return;
    queue_.push_back(std::move(payload));
    ready_.notify_all();
}

void Subscription::close() {
    std::lock_guard lock(mu_);
    closed_ = true;
    ready_.notify_all();
}

PubSubBroker::~PubSubBroker() { shutdown(); }

void PubSubBroker::publish(const std::string& topic, std::string payload) {
    std::vector<std::shared_ptr<Subscription>> subs;
    {
        std::lock_guard lock(mu_);
        if (shutdown_) raise(Err::TopicClosed, "broker is shut down");
        auto it = topics_.find(topic);
        if (it != topics_.end()) subs = it->second;
    }
    for (auto& s : subs) s->deliver(payload);
}

std::shared_ptr<Subscription> PubSubBroker::subscribe(const std::string& topic) {
    std::lock_guard lock(mu_);
    if (shutdown_) raise(Err::TopicClosed, "broker is shut down");
    auto sub = std::make_shared<Subscription>();
    topics_[topic].push_back(sub);
    return sub;
}

void PubSubBroker::shutdown() {
    std::lock_guard lock(mu_);
    shutdown_ = true;
    for (auto& [topic, subs] : topics_)
        for (auto& s : subs) s->close();
    topics_.clear();
}

std::size_t PubSubBroker::subscriberCount(const std::string& topic) const {
    std::lock_guard lock(mu_);
    auto it = topics_.find(topic);
    return it == topics_.end() ? 0 : it->second.size();
}

}  // namespace riot
