#ifndef RIOT_SERVICES_PUBSUB_HPP
#define RIOT_SERVICES_PUBSUB_HPP

#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace riot {

/// Subscriber-side buffer: published payloads queue up here until the
/// owner polls them, in publish order per topic.
class Subscription {
public:
    /// Non-blocking poll.
    std::optional<std::string> poll();

    /// Blocks up to timeoutMs for the next payload.
    std::optional<std::string> pollFor(std::int64_t timeoutMs);

    bool closed() const;
    std::size_t pending() const;

private:
    friend class PubSubBroker;
    void deliver(std::string payload);
    void close();

    mutable std::mutex mu_;
    std::condition_variable ready_;
    std::deque<std::string> queue_;
    bool closed_ = false;
};

/// In-process publish-subscribe broker. A payload published after a
/// subscription exists is delivered to every live subscriber of the
/// topic exactly once, in publish order; earlier subscribers see nothing.
class PubSubBroker {
public:
    ~PubSubBroker();

    void publish(const std::string& topic, std::string payload);
    std::shared_ptr<Subscription> subscribe(const std::string& topic);

    /// Closes every subscription; later publishes raise TopicClosed.
    void shutdown();

    std::size_t subscriberCount(const std::string& topic) const;

private:
    mutable std::mutex mu_;
    std::map<std::string, std::vector<std::shared_ptr<Subscription>>> topics_;
    bool shutdown_ = false;
};

}  // namespace riot

#endif
