#include "agility/example_data.hpp"

#include <sstream>

namespace agility::example {

namespace {

// Practice-to-level placement is illustrative; item weights default to equal.
constexpr std::string_view kFramework = R"json({
  "name": "agile-adoption-example",
  "scale_size": 5,
  "levels": [
    {
      "name": "Level 1",
      "rank": 1,
      "principles": [
        {
          "name": "Collaboration",
          "practices": [
            {
              "name": "Collaborative planning",
              "items": [
                "C01_M",
                "C01_D",
                "C02_M",
                "C03_M",
                "C04_D",
                "C05_D",
                "C06_M"
              ]
            },
            {
              "name": "Collaborative teams",
              "items": [
                "C07_M",
                "C07_D",
                "C08_D",
                "C09_D",
                "C10_D"
              ]
            }
          ]
        }
      ]
    },
    {
      "name": "Level 2",
      "rank": 2,
      "principles": [
        {
          "name": "Human centricity",
          "practices": [
            {
              "name": "Empowered and motivated teams",
              "items": [
                "C16_M",
                "C17_D",
                "C18_M"
              ]
            },
            {
              "name": "Customer commitment",
              "items": [
                "C03_M",
                "C21_M",
                "C21_D"
              ]
            }
          ]
        }
      ]
    },
    {
      "name": "Level 3",
      "rank": 3,
      "principles": [
        {
          "name": "Technical excellence",
          "practices": [
            {
              "name": "Working standards/procedures",
              "items": [
                "C11_D"
              ]
            },
            {
              "name": "Knowledge sharing tools",
              "items": [
                "C12_D",
                "C13_M"
              ]
            }
          ]
        }
      ]
    },
    {
      "name": "Level 4",
      "rank": 4,
      "principles": [
        {
          "name": "Self-organization",
          "practices": [
            {
              "name": "Task volunteering",
              "items": [
                "C14_M",
                "C15_D"
              ]
            }
          ]
        }
      ]
    },
    {
      "name": "Level 5",
      "rank": 5,
      "principles": [
        {
          "name": "Continuous improvement",
          "practices": [
            {
              "name": "Reflect and tune process",
              "items": [
                "C19_D",
                "C20_M",
                "C21_M",
                "C21_D"
              ]
            }
          ]
        }
      ]
    }
  ],
  "items": [
    {
      "id": "C01_M",
      "text": "Decisions about the team's work are agreed together with the developers rather than handed down.",
      "role": "manager",
      "characteristic": 1
    },
    {
      "id": "C01_D",
      "text": "My manager and I work together as collaborators rather than in a command-and-control relationship.",
      "role": "developer",
      "characteristic": 1
    },
    {
      "id": "C02_M",
      "text": "I actively support a collaborative working environment in the team.",
      "role": "manager",
      "characteristic": 2
    },
    {
      "id": "C03_M",
      "text": "I can be open with customers and developers about the project, without politics or secrets.",
      "role": "manager",
      "characteristic": 3
    },
    {
      "id": "C04_D",
      "text": "I feel comfortable giving honest feedback and taking part in discussions when managers are present.",
      "role": "developer",
      "characteristic": 4
    },
    {
      "id": "C05_D",
      "text": "I am willing to plan our work together with the rest of the team.",
      "role": "developer",
      "characteristic": 5
    },
    {
      "id": "C06_M",
      "text": "Our projects go through basic planning before the work starts.",
      "role": "manager",
      "characteristic": 6
    },
    {
      "id": "C07_M",
      "text": "People in this team interact regularly about their work.",
      "role": "manager",
      "characteristic": 7
    },
    {
      "id": "C07_D",
      "text": "I interact regularly with other team members about our work.",
      "role": "developer",
      "characteristic": 7
    },
    {
      "id": "C08_D",
      "text": "I help colleagues even when it is not part of my own tasks.",
      "role": "developer",
      "characteristic": 8
    },
    {
      "id": "C09_D",
      "text": "I prefer working in a team over working on my own.",
      "role": "developer",
      "characteristic": 9
    },
    {
      "id": "C10_D",
      "text": "My input makes a difference to what the team achieves.",
      "role": "developer",
      "characteristic": 10
    },
    {
      "id": "C11_D",
      "text": "Applying common coding standards is worth the effort.",
      "role": "developer",
      "characteristic": 11
    },
    {
      "id": "C12_D",
      "text": "Having project information shared with the whole team helps me in my work.",
      "role": "developer",
      "characteristic": 12
    },
    {
      "id": "C13_M",
      "text": "Sharing project information with the whole team is beneficial.",
      "role": "manager",
      "characteristic": 13
    },
    {
      "id": "C14_M",
      "text": "I am comfortable with team members volunteering for tasks instead of being assigned to them.",
      "role": "manager",
      "characteristic": 14
    },
    {
      "id": "C15_D",
      "text": "I see benefits in volunteering for tasks myself.",
      "role": "developer",
      "characteristic": 15
    },
    {
      "id": "C16_M",
      "text": "The team has the authority to make decisions about its own work.",
      "role": "manager",
      "characteristic": 16
    },
    {
      "id": "C17_D",
      "text": "The way I am treated at work motivates me.",
      "role": "developer",
      "characteristic": 17
    },
    {
      "id": "C18_M",
      "text": "I trust the technical team enough to let it make its own decisions.",
      "role": "manager",
      "characteristic": 18
    },
    {
      "id": "C19_D",
      "text": "I am willing to reflect on and tune our process after each iteration or release.",
      "role": "developer",
      "characteristic": 19
    },
    {
      "id": "C20_M",
      "text": "I am willing to commit to reflecting on and tuning the process after each iteration or release.",
      "role": "manager",
      "characteristic": 20
    },
    {
      "id": "C21_M",
      "text": "Our organization can handle a change of process in the middle of a project.",
      "role": "manager",
      "characteristic": 21
    },
    {
      "id": "C21_D",
      "text": "Our organization can handle a change of process in the middle of a project.",
      "role": "developer",
      "characteristic": 21
    }
  ]
})json";

constexpr std::string_view kTeamA = R"csv(respondent_id,role,item_id,answer
m1,manager,C01_M,4
m1,manager,C02_M,4
m1,manager,C03_M,5
m1,manager,C06_M,4
m1,manager,C07_M,5
m1,manager,C13_M,4
m1,manager,C14_M,2
m1,manager,C16_M,4
m1,manager,C18_M,5
m1,manager,C20_M,1
m1,manager,C21_M,4
m2,manager,C01_M,5
m2,manager,C02_M,4
m2,manager,C03_M,4
m2,manager,C06_M,5
m2,manager,C07_M,4
m2,manager,C13_M,5
m2,manager,C14_M,1
m2,manager,C16_M,5
m2,manager,C18_M,4
m2,manager,C20_M,2
m2,manager,C21_M,4
d1,developer,C01_D,3
d1,developer,C04_D,1
d1,developer,C05_D,2
d1,developer,C07_D,5
d1,developer,C08_D,4
d1,developer,C09_D,5
d1,developer,C10_D,4
d1,developer,C11_D,4
d1,developer,C12_D,5
d1,developer,C15_D,2
d1,developer,C17_D,4
d1,developer,C19_D,4
d1,developer,C21_D,4
d2,developer,C01_D,2
d2,developer,C04_D,2
d2,developer,C05_D,3
d2,developer,C07_D,4
d2,developer,C08_D,5
d2,developer,C09_D,4
d2,developer,C10_D,5
d2,developer,C11_D,5
d2,developer,C12_D,4
d2,developer,C15_D,1
d2,developer,C17_D,5
d2,developer,C19_D,5
d2,developer,C21_D,4
d3,developer,C01_D,3
d3,developer,C04_D,1
d3,developer,C05_D,2
d3,developer,C07_D,5
d3,developer,C08_D,4
d3,developer,C09_D,4
d3,developer,C10_D,4
d3,developer,C11_D,4
d3,developer,C12_D,4
d3,developer,C15_D,2
d3,developer,C17_D,4
d3,developer,C19_D,4
d3,developer,C21_D,4
d4,developer,C01_D,2
d4,developer,C04_D,2
d4,developer,C05_D,2
d4,developer,C07_D,4
d4,developer,C08_D,4
d4,developer,C09_D,5
d4,developer,C10_D,4
d4,developer,C11_D,5
d4,developer,C12_D,5
d4,developer,C15_D,3
d4,developer,C17_D,4
d4,developer,C19_D,4
d4,developer,C21_D,4
d5,developer,C01_D,3
d5,developer,C04_D,1
d5,developer,C05_D,3
d5,developer,C07_D,5
d5,developer,C08_D,5
d5,developer,C09_D,4
d5,developer,C10_D,5
d5,developer,C11_D,4
d5,developer,C12_D,4
d5,developer,C15_D,2
d5,developer,C17_D,5
d5,developer,C19_D,4
d5,developer,C21_D,4
)csv";

}  // namespace

std::string_view framework_json() { return kFramework; }

std::string_view team_a_csv() { return kTeamA; }

std::string uniform_responses_csv(const Framework& framework, std::size_t managers, std::size_t developers,
                                  int answer) {
    std::ostringstream out;
    out << "respondent_id,role,item_id,answer\n";
    auto emit = [&](Role role, std::size_t count, const char* prefix) {
        for (std::size_t i = 1; i <= count; ++i) {
            for (const auto& [id, item] : framework.items) {
                if (item.role != role) continue;
                out << prefix << i << "," << to_string(role) << "," << id << "," << answer << "\n";
            }
        }
    };
    emit(Role::Manager, managers, "m");
    emit(Role::Developer, developers, "d");
    return out.str();
}

}  // namespace agility::example
